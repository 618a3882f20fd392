#pragma once

/**
 * @file exactnum.hpp
 * @brief Exact integers, rationals and small cyclotomic rings.
 *
 * Integers are GMP-backed. Cyclotomic integers live in Z[zeta_n] for
 * n in {1,2,3,4,6,12}, stored on the power basis 1, zeta, ..., zeta^(phi(n)-1)
 * and reduced modulo Phi_n, so equality is a coefficient comparison.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ec {

using Int = mpz_class;

// Error taxonomy; the CLI maps each kind to an exit code.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UsageError : Error {
    using Error::Error;
};
struct HypothesisError : Error {
    using Error::Error;
};
struct DataError : Error {
    using Error::Error;
};
/// Raised when an internal invariant fails (never silently repaired).
struct InvariantViolation : Error {
    using Error::Error;
};

inline Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int ipow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Int igcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& x) {
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

/**
 * Arbitrary-precision signed rational, always in lowest terms with a
 * positive denominator. The value type of every Euler characteristic.
 */
class Rational {
    mpq_class v_;

public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(implicit)
    Rational(const Int& n) : v_(n) {}  // NOLINT(implicit)
    Rational(const Int& n, const Int& d) {
        if (d == 0) throw std::domain_error("division by zero");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "p/q" or "-p/q".
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(Int(s));
            return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("not a rational: '" + s + "'");
        }
    }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
};

/// rat(num, den): canonical lowest-terms value.
inline Rational rat(const Int& num, const Int& den) { return Rational(num, den); }

// ---------------------------------------------------------------------------
// 64-bit prime arithmetic (trial division + deterministic Miller-Rabin)
// ---------------------------------------------------------------------------

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Deterministic for all 64-bit inputs (first twelve prime bases).
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

/// Prime factorization as (p, exponent) pairs, p increasing.
inline std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    if (n == 0) throw std::domain_error("cannot factor 0");
    for (std::uint64_t p = 2; n > 1 && p <= n / p; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
        if (is_prime_u64(n)) break;
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::uint64_t to_u64(const Int& x, const char* what) {
    if (x < 0 || !mpz_fits_ulong_p(x.get_mpz_t()))
        throw std::out_of_range(std::string(what) + " does not fit in 64 bits");
    return x.get_ui();
}

// ---------------------------------------------------------------------------
// CyclotomicInt
// ---------------------------------------------------------------------------

namespace detail {

struct CycData {
    int n;
    int phi;
    std::vector<int> modulus;  // Phi_n, low degree first, monic
    std::vector<int> units;    // (Z/n)^*
};

inline const CycData& cyc_data(int n) {
    static const CycData table[] = {
        {1, 1, {-1, 1}, {0}},
        {2, 1, {1, 1}, {1}},
        {3, 2, {1, 1, 1}, {1, 2}},
        {4, 2, {1, 0, 1}, {1, 3}},
        {6, 2, {1, -1, 1}, {1, 5}},
        {12, 4, {1, 0, -1, 0, 1}, {1, 5, 7, 11}},
    };
    for (const auto& d : table)
        if (d.n == n) return d;
    throw std::invalid_argument("unsupported cyclotomic conductor " + std::to_string(n));
}

}  // namespace detail

/**
 * Element of Z[zeta_n], n in {1,2,3,4,6,12}.
 *
 * Immutable value type; mixing conductors is an error, promote with embed().
 */
class CyclotomicInt {
    int n_ = 1;
    std::vector<Int> c_{Int(0)};

    // Fold exponents mod n, then divide out Phi_n from the top.
    static std::vector<Int> reduce(int n, std::vector<Int> full) {
        const auto& d = detail::cyc_data(n);
        std::vector<Int> folded(static_cast<std::size_t>(n), Int(0));
        for (std::size_t i = 0; i < full.size(); ++i) folded[i % static_cast<std::size_t>(n)] += full[i];
        for (int deg = n - 1; deg >= d.phi; --deg) {
            Int top = folded[static_cast<std::size_t>(deg)];
            if (top == 0) continue;
            int shift = deg - d.phi;
            for (int j = 0; j <= d.phi; ++j)
                folded[static_cast<std::size_t>(shift + j)] -= top * d.modulus[static_cast<std::size_t>(j)];
        }
        folded.resize(static_cast<std::size_t>(d.phi));
        return folded;
    }

public:
    CyclotomicInt() = default;
    explicit CyclotomicInt(int n) : n_(n), c_(static_cast<std::size_t>(detail::cyc_data(n).phi), Int(0)) {}

    static bool supported(int n) {
        return n == 1 || n == 2 || n == 3 || n == 4 || n == 6 || n == 12;
    }
    static int euler_phi(int n) { return detail::cyc_data(n).phi; }

    /// Element sum_i full[i] * zeta_n^i, any length.
    static CyclotomicInt from_powers(int n, std::vector<Int> full) {
        CyclotomicInt r(n);
        r.c_ = reduce(n, std::move(full));
        return r;
    }
    static CyclotomicInt from_int(int n, const Int& v) { return from_powers(n, {v}); }

    /// zeta_n^k for any integer k.
    static CyclotomicInt zeta(int n, long k) {
        long e = ((k % n) + n) % n;
        std::vector<Int> full(static_cast<std::size_t>(e + 1), Int(0));
        full[static_cast<std::size_t>(e)] = 1;
        return from_powers(n, std::move(full));
    }

    int conductor() const { return n_; }
    const std::vector<Int>& coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Int& x) { return x == 0; });
    }
    bool is_rational() const {
        return std::all_of(c_.begin() + 1, c_.end(), [](const Int& x) { return x == 0; });
    }
    Int to_int() const {
        if (!is_rational()) throw InvariantViolation("cyclotomic value is not a rational integer: " + str());
        return c_[0];
    }

    CyclotomicInt operator-() const {
        CyclotomicInt r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b) {
        a.same(b);
        CyclotomicInt r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend CyclotomicInt operator-(const CyclotomicInt& a, const CyclotomicInt& b) { return a + (-b); }
    friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
        a.same(b);
        std::vector<Int> full(a.c_.size() + b.c_.size(), Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) full[i + j] += a.c_[i] * b.c_[j];
        }
        return from_powers(a.n_, std::move(full));
    }
    CyclotomicInt& operator+=(const CyclotomicInt& o) { return *this = *this + o; }
    CyclotomicInt& operator*=(const CyclotomicInt& o) { return *this = *this * o; }
    friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }
    friend bool operator!=(const CyclotomicInt& a, const CyclotomicInt& b) { return !(a == b); }

    CyclotomicInt scaled(const Int& k) const {
        CyclotomicInt r = *this;
        for (auto& x : r.c_) x *= k;
        return r;
    }

    /// Galois automorphism zeta -> zeta^a, gcd(a, n) = 1.
    CyclotomicInt galois(int a) const {
        if (std::gcd(a, n_) != 1 && n_ > 1) throw std::invalid_argument("galois exponent not a unit mod n");
        std::vector<Int> full(static_cast<std::size_t>(n_ * n_ + 1), Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            long e = (static_cast<long>(i) * a) % n_;
            if (e < 0) e += n_;
            full[static_cast<std::size_t>(e)] += c_[i];
        }
        return from_powers(n_, std::move(full));
    }
    CyclotomicInt conj() const { return n_ <= 2 ? *this : galois(n_ - 1); }

    /// Same element viewed in Z[zeta_m], n | m.
    CyclotomicInt embed(int m) const {
        if (m % n_ != 0) throw std::invalid_argument("cannot embed conductor " + std::to_string(n_) +
                                                     " into " + std::to_string(m));
        int step = m / n_;
        std::vector<Int> full(static_cast<std::size_t>(step) * c_.size() + 1, Int(0));
        // zeta_n = zeta_m^step; conductor 1 and 2 are plain integers.
        if (n_ <= 2) return from_int(m, c_[0]);
        for (std::size_t i = 0; i < c_.size(); ++i) full[i * static_cast<std::size_t>(step)] = c_[i];
        return from_powers(m, std::move(full));
    }

    /// Product of all Galois conjugates.
    Int norm_to_Q() const {
        const auto& d = detail::cyc_data(n_);
        CyclotomicInt prod = from_int(n_, 1);
        for (int a : d.units) prod = prod * (n_ <= 2 ? *this : galois(a));
        return prod.to_int();
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Int v = c_[i];
            bool neg = v < 0;
            Int a = iabs(v);
            if (!s.empty()) s += neg ? " - " : " + ";
            else if (neg) s += "-";
            if (i == 0) s += a.get_str();
            else {
                if (a != 1) s += a.get_str() + "*";
                s += "z" + std::to_string(n_);
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

private:
    void same(const CyclotomicInt& o) const {
        if (n_ != o.n_)
            throw std::invalid_argument("conductor mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    }
};

inline CyclotomicInt cyc_mul(const CyclotomicInt& a, const CyclotomicInt& b) { return a * b; }
inline Int cyc_norm_to_Q(const CyclotomicInt& a) { return a.norm_to_Q(); }
inline CyclotomicInt cyc_embed(const CyclotomicInt& a, int m) { return a.embed(m); }

/// Root of unity zeta_12^k as an element of Z[zeta_n]; needs (12/n) | k.
inline CyclotomicInt root12_in(int n, int k) {
    int step = 12 / n;
    int kk = ((k % 12) + 12) % 12;
    if (kk % step != 0) {
        // Z[zeta_3] also holds the sixth roots: zeta6^j = (-1)^j zeta3^(2j).
        if (n == 3 && kk % 2 == 0) {
            int j = kk / 2;
            CyclotomicInt z = CyclotomicInt::zeta(3, 2 * j);
            return j % 2 ? -z : z;
        }
        throw std::invalid_argument("zeta12^" + std::to_string(k) + " is not in Z[zeta" + std::to_string(n) + "]");
    }
    return CyclotomicInt::zeta(n, kk / step);
}

// ---------------------------------------------------------------------------
// Gaussian and Eisenstein factorization
// ---------------------------------------------------------------------------

/// The two Euclidean imaginary quadratic rings we factor in.
enum class QuadRing { Z_i, Z_xi3 };

inline int ring_conductor(QuadRing r) { return r == QuadRing::Z_i ? 4 : 3; }
inline const char* ring_name(QuadRing r) { return r == QuadRing::Z_i ? "Z[i]" : "Z[xi3]"; }

/// a + b*g with g = i (conductor 4) or g = xi3 (conductor 3).
inline CyclotomicInt quad(QuadRing r, const Int& a, const Int& b) {
    return CyclotomicInt::from_powers(ring_conductor(r), {a, b});
}

struct PrimePower {
    CyclotomicInt prime;
    int exponent = 0;
    Int residue_norm;  // N(p): p for split/ramified, p^2 for inert
};

struct GaussianFactorization {
    QuadRing ring = QuadRing::Z_i;
    CyclotomicInt unit;
    std::vector<PrimePower> prime_powers;

    CyclotomicInt reassemble() const {
        CyclotomicInt r = unit;
        for (const auto& pp : prime_powers)
            for (int e = 0; e < pp.exponent; ++e) r = r * pp.prime;
        return r;
    }
};

namespace detail {

inline bool exact_div(const CyclotomicInt& x, const CyclotomicInt& p, CyclotomicInt& q) {
    Int np = p.norm_to_Q();
    CyclotomicInt t = x * p.conj();
    for (const auto& c : t.coeffs())
        if (!divides(np, c)) return false;
    std::vector<Int> cs = t.coeffs();
    for (auto& c : cs) c /= np;
    q = CyclotomicInt::from_powers(x.conductor(), cs);
    return true;
}

// Rotate by units into the first quadrant (Z[i]: a > 0, b >= 0) or the
// first sextant (Z[xi3]: 0 <= b < a), which picks a unique associate.
inline CyclotomicInt normalize_associate(QuadRing r, CyclotomicInt x) {
    CyclotomicInt u = r == QuadRing::Z_i ? CyclotomicInt::zeta(4, 1) : quad(r, 1, 1);  // i, or 1 + xi3 = zeta6
    int k = r == QuadRing::Z_i ? 4 : 6;
    for (int t = 0; t < k; ++t) {
        const Int& a = x.coeffs()[0];
        const Int& b = x.coeffs()[1];
        bool ok = r == QuadRing::Z_i ? (a > 0 && b >= 0) : (b >= 0 && b < a);
        if (ok) return x;
        x = x * u;
    }
    throw InvariantViolation("no normalized associate for " + x.str());
}

inline Int isqrt_exact(const Int& n, bool& ok) {
    if (n < 0) { ok = false; return 0; }
    Int s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    ok = s * s == n;
    return s;
}

// Ring primes above the rational prime p, with their norms.
inline std::vector<std::pair<CyclotomicInt, Int>> primes_above(QuadRing r, std::uint64_t p) {
    std::vector<std::pair<CyclotomicInt, Int>> out;
    Int P(static_cast<unsigned long>(p));
    if (r == QuadRing::Z_i) {
        if (p == 2) return {{normalize_associate(r, quad(r, 1, 1)), 2}};
        if (p % 4 == 3) return {{quad(r, P, 0), P * P}};
        for (Int a = 1; a * a < P; ++a) {
            bool ok = false;
            Int b = isqrt_exact(P - a * a, ok);
            if (ok) {
                out.push_back({normalize_associate(r, quad(r, a, b)), P});
                out.push_back({normalize_associate(r, quad(r, a, -b)), P});
                return out;
            }
        }
    } else {
        if (p == 3) return {{normalize_associate(r, quad(r, 1, -1)), 3}};
        if (p % 3 == 2) return {{quad(r, P, 0), P * P}};
        // a^2 - ab + b^2 = p  <=>  (2a - b)^2 = 4p - 3b^2
        for (Int b = 1; 3 * b * b <= 4 * P; ++b) {
            bool ok = false;
            Int s = isqrt_exact(4 * P - 3 * b * b, ok);
            if (!ok || (s + b) % 2 != 0) continue;
            Int a = (s + b) / 2;
            CyclotomicInt pi = quad(r, a, b);
            out.push_back({normalize_associate(r, pi), P});
            out.push_back({normalize_associate(r, pi.conj()), P});
            return out;
        }
    }
    throw InvariantViolation("failed to split prime " + std::to_string(p) + " in " + ring_name(r));
}

}  // namespace detail

/**
 * Factor a nonzero element of Z[i] or Z[xi3] into normalized primes.
 *
 * The rational norm is factored first; each rational prime is then split
 * according to its residue class (mod 4, resp. mod 3).
 */
inline GaussianFactorization gaussian_factor(const CyclotomicInt& a_in, QuadRing ring) {
    int n = ring_conductor(ring);
    CyclotomicInt a = a_in.conductor() <= 2 ? a_in.embed(n) : a_in;
    if (a.conductor() != n) throw std::invalid_argument(std::string("element is not in ") + ring_name(ring));
    if (a.is_zero()) throw std::domain_error("cannot factor zero");

    GaussianFactorization f;
    f.ring = ring;
    Int N = a.norm_to_Q();
    CyclotomicInt rest = a;
    for (auto [p, e] : factor_u64(to_u64(N, "norm"))) {
        (void)e;
        for (auto& [pi, np] : detail::primes_above(ring, p)) {
            int k = 0;
            CyclotomicInt q;
            while (detail::exact_div(rest, pi, q)) { rest = q; ++k; }
            if (k > 0) f.prime_powers.push_back({pi, k, np});
        }
    }
    if (rest.norm_to_Q() != 1) throw InvariantViolation("factorization left a non-unit cofactor " + rest.str());
    f.unit = rest;
    return f;
}

}  // namespace ec
