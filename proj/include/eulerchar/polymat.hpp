#pragma once

/**
 * @file polymat.hpp
 * @brief Integer polynomials and exact matrices over Z or Z[zeta_n].
 *
 * Covers characteristic polynomials, resultants, the Sylvester operator
 * X -> XB - AX in column-stacked form, determinants and Smith normal form.
 */

#include "exactnum.hpp"

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace ec {

// ---------------------------------------------------------------------------
// IntPoly
// ---------------------------------------------------------------------------

/// Dense polynomial over Z, lowest degree first, no trailing zeros.
class IntPoly {
    std::vector<Int> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> c) : c_(std::move(c)) { trim(); }
    IntPoly(std::initializer_list<long> c) {
        for (long x : c) c_.emplace_back(x);
        trim();
    }

    /// t - a
    static IntPoly linear(const Int& a) { return IntPoly(std::vector<Int>{-a, 1}); }

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& lead() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Int coeff(int i) const { return i < static_cast<int>(c_.size()) && i >= 0 ? c_[static_cast<std::size_t>(i)] : Int(0); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(r));
    }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return a.c_ != b.c_; }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            Int v = c_[static_cast<std::size_t>(i)];
            if (v == 0) continue;
            bool neg = v < 0;
            Int a = iabs(v);
            if (!s.empty()) s += neg ? " - " : " + ";
            else if (neg) s += "-";
            if (i == 0 || a != 1) s += a.get_str();
            if (i >= 1) s += "t";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }
};

// ---------------------------------------------------------------------------
// Matrix
// ---------------------------------------------------------------------------

namespace detail {
inline Int zero_like(const Int&) { return Int(0); }
inline CyclotomicInt zero_like(const CyclotomicInt& x) { return CyclotomicInt(x.conductor()); }
inline Int one_like(const Int&) { return Int(1); }
inline CyclotomicInt one_like(const CyclotomicInt& x) { return CyclotomicInt::from_int(x.conductor(), 1); }
}  // namespace detail

/**
 * Dense row-major matrix over Int or CyclotomicInt.
 */
template <class T>
class Matrix {
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> e_;

public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, const T& fill) : r_(r), c_(c), e_(r * c, fill) {}
    Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), e_(r * c, T()) {}

    static Matrix identity(std::size_t n, const T& like = T()) {
        Matrix m(n, n, detail::zero_like(like));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = detail::one_like(like);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }
    const std::vector<T>& entries() const { return e_; }
    std::vector<T>& entries_mut() { return e_; }

    T& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }

    T zero() const { return e_.empty() ? T() : detail::zero_like(e_[0]); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch in product");
        Matrix m(a.r_, b.c_, a.e_.empty() ? b.zero() : a.zero());
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                for (std::size_t j = 0; j < b.c_; ++j) m(i, j) = m(i, j) + x * b(k, j);
            }
        return m;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch in sum");
        Matrix m = a;
        for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = m.e_[i] + b.e_[i];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch in difference");
        Matrix m = a;
        for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = m.e_[i] - b.e_[i];
        return m;
    }
    Matrix operator-() const {
        Matrix m = *this;
        for (auto& x : m.e_) x = -x;
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix m(c_, r_, zero());
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix block(std::size_t i0, std::size_t j0, std::size_t nr, std::size_t nc) const {
        Matrix m(nr, nc, zero());
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
        return m;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < r_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
};

using IntMatrix = Matrix<Int>;
using CycMatrix = Matrix<CyclotomicInt>;

/// Row-major literal, e.g. int_matrix({{0,1},{-1,-1}}).
inline IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size(), c = r ? rows.begin()->size() : 0;
    IntMatrix m(r, c, Int(0));
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
        std::size_t j = 0;
        for (long x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

inline std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

template <class T>
Matrix<T> mat_pow(const Matrix<T>& a, unsigned long e) {
    if (!a.square()) throw std::invalid_argument("power of non-square matrix");
    Matrix<T> r = Matrix<T>::identity(a.rows(), a.entries().empty() ? T() : a(0, 0));
    Matrix<T> b = a;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

/// Kronecker product with the block convention (k,l) block of A (x) B = b_kl * A.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> m(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
    for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
            for (std::size_t i = 0; i < a.rows(); ++i)
                for (std::size_t j = 0; j < a.cols(); ++j)
                    m(k * a.rows() + i, l * a.cols() + j) = b(k, l) * a(i, j);
    return m;
}

/// Column stacking: vec(X)[j*rows + i] = X(i,j).
template <class T>
std::vector<T> vec(const Matrix<T>& x) {
    std::vector<T> v;
    v.reserve(x.rows() * x.cols());
    for (std::size_t j = 0; j < x.cols(); ++j)
        for (std::size_t i = 0; i < x.rows(); ++i) v.push_back(x(i, j));
    return v;
}

template <class T>
Matrix<T> unvec(const std::vector<T>& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw std::invalid_argument("unvec size mismatch");
    Matrix<T> x(rows, cols, v.empty() ? T() : detail::zero_like(v[0]));
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) x(i, j) = v[j * rows + i];
    return x;
}

template <class T>
std::vector<T> mat_vec(const Matrix<T>& m, const std::vector<T>& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> out(m.rows(), m.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] = out[i] + m(i, j) * v[j];
    return out;
}

// ---------------------------------------------------------------------------
// Determinants
// ---------------------------------------------------------------------------

/// Fraction-free Bareiss elimination.
inline Int det(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace detail {
inline CyclotomicInt det_expand(const CycMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
    std::size_t n = m.rows();
    if (row == n) return one_like(m(0, 0));
    CyclotomicInt acc = m.zero();
    int sign = 1;
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        std::size_t c = cols[idx];
        if (!m(row, c).is_zero()) {
            std::vector<std::size_t> rest = cols;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
            CyclotomicInt sub = m(row, c) * det_expand(m, rest, row + 1);
            acc = sign > 0 ? acc + sub : acc - sub;
        }
        sign = -sign;
    }
    return acc;
}
}  // namespace detail

/// Laplace expansion; cyclotomic matrices here are at most 6x6 or so.
inline CyclotomicInt det(const CycMatrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
    if (m.rows() == 0) return CyclotomicInt::from_int(1, 1);
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return detail::det_expand(m, cols, 0);
}

/// Inverse of a unimodular integer matrix (exact; throws if not unimodular).
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = m.rows();
    std::vector<mpq_class> a(n * 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i * 2 * n + j] = mpq_class(m(i, j));
            a[i * 2 * n + n + j] = i == j ? 1 : 0;
        }
    auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return a[i * 2 * n + j]; };
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && at(p, k) == 0) ++p;
        if (p == n) throw std::domain_error("singular matrix");
        if (p != k)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(p, j), at(k, j));
        mpq_class piv = at(k, k);
        for (std::size_t j = 0; j < 2 * n; ++j) at(k, j) /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || at(i, k) == 0) continue;
            mpq_class f = at(i, k);
            for (std::size_t j = 0; j < 2 * n; ++j) at(i, j) -= f * at(k, j);
        }
    }
    IntMatrix inv(n, n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const mpq_class& q = at(i, n + j);
            if (q.get_den() != 1) throw std::domain_error("matrix is not unimodular");
            inv(i, j) = q.get_num();
        }
    return inv;
}

// ---------------------------------------------------------------------------
// Polynomial operations
// ---------------------------------------------------------------------------

/// Companion matrix: ones on the superdiagonal, last row -c_0 .. -c_{d-1}.
inline IntMatrix companion(const IntPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("companion needs degree >= 1");
    if (!f.is_monic()) throw std::invalid_argument("companion needs a monic polynomial");
    std::size_t d = static_cast<std::size_t>(f.degree());
    IntMatrix m(d, d, Int(0));
    for (std::size_t i = 0; i + 1 < d; ++i) m(i, i + 1) = 1;
    for (std::size_t j = 0; j < d; ++j) m(d - 1, j) = -f.coeffs()[j];
    return m;
}

/**
 * det(tI - A) by Faddeev-LeVerrier; every division is exact over Z.
 */
inline IntPoly char_poly(const IntMatrix& a) {
    if (!a.square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
    std::size_t n = a.rows();
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    IntMatrix mk = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix am = a * mk;
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        Int ck = -tr;
        if (!divides(Int(static_cast<unsigned long>(k)), ck)) throw InvariantViolation("inexact Faddeev-LeVerrier step");
        ck /= static_cast<unsigned long>(k);
        c[n - k] = ck;
        mk = am;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += ck;
    }
    return IntPoly(std::move(c));
}

/// Determinant of the Sylvester matrix of f and g.
inline Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of the zero polynomial");
    int m = f.degree(), n = g.degree();
    if (m == 0) return ipow(f.lead(), static_cast<unsigned long>(n));
    if (n == 0) return ipow(g.lead(), static_cast<unsigned long>(m));
    std::size_t s = static_cast<std::size_t>(m + n);
    IntMatrix syl(s, s, Int(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) syl(static_cast<std::size_t>(i), static_cast<std::size_t>(i + j)) = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            syl(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + j)) = g.coeff(n - j);
    return det(syl);
}

/// Product of pairwise resultants over all i < j.
inline Int multi_resultant(const std::vector<IntPoly>& fs) {
    if (fs.size() < 2) throw std::invalid_argument("multi_resultant needs at least two polynomials");
    Int r = 1;
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j) r *= resultant(fs[i], fs[j]);
    return r;
}

/**
 * Matrix of X -> X*B - A*X on m1 x m2 matrices under column stacking:
 * I_{m1} (x) B^t - A (x) I_{m2}, with the block convention of kron().
 */
template <class T>
Matrix<T> sylvester_op(const Matrix<T>& a, const Matrix<T>& b) {
    if (!a.square() || !b.square()) throw std::invalid_argument("sylvester_op needs square blocks");
    T like = !a.entries().empty() ? a(0, 0) : b(0, 0);
    auto i1 = Matrix<T>::identity(a.rows(), like);
    auto i2 = Matrix<T>::identity(b.rows(), like);
    return kron(i1, b.transpose()) - kron(a, i2);
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

/// left * M * right = diag(d_1, ..., d_k) padded with zeros, d_1 | d_2 | ...
struct SmithForm {
    std::vector<Int> diag;
    IntMatrix left, right;
};

/**
 * Elimination with pivoting on the entry of least absolute value.
 */
inline SmithForm smith_normal_form(const IntMatrix& m) {
    std::size_t R = m.rows(), C = m.cols();
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(R), v = IntMatrix::identity(C);
    std::size_t t = 0;
    for (; t < std::min(R, C); ++t) {
        for (;;) {
            // pivot: least nonzero |entry| in the trailing block
            std::size_t pi = R, pj = C;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (d(i, j) != 0 && (pi == R || iabs(d(i, j)) < iabs(d(pi, pj)))) { pi = i; pj = j; }
            if (pi == R) goto done;
            if (pi != t) { d.swap_rows(pi, t); u.swap_rows(pi, t); }
            if (pj != t) { d.swap_cols(pj, t); v.swap_cols(pj, t); }

            bool dirty = false;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (d(i, t) == 0) continue;
                Int q = d(i, t) / d(t, t);
                for (std::size_t j = t; j < C; ++j) d(i, j) -= q * d(t, j);
                for (std::size_t j = 0; j < R; ++j) u(i, j) -= q * u(t, j);
                if (d(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (d(t, j) == 0) continue;
                Int q = d(t, j) / d(t, t);
                for (std::size_t i = t; i < R; ++i) d(i, j) -= q * d(i, t);
                for (std::size_t i = 0; i < C; ++i) v(i, j) -= q * v(i, t);
                if (d(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // divisibility: fold an offending row into the pivot row
            std::size_t bad = R;
            for (std::size_t i = t + 1; i < R && bad == R; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (!divides(d(t, t), d(i, j))) { bad = i; break; }
            if (bad == R) break;
            for (std::size_t j = t; j < C; ++j) d(t, j) += d(bad, j);
            for (std::size_t j = 0; j < R; ++j) u(t, j) += u(bad, j);
        }
        if (d(t, t) < 0) {
            for (std::size_t j = t; j < C; ++j) d(t, j) = -d(t, j);
            for (std::size_t j = 0; j < R; ++j) u(t, j) = -u(t, j);
        }
    }
done:
    SmithForm s;
    for (std::size_t i = 0; i < std::min(R, C); ++i) s.diag.push_back(d(i, i));
    s.left = std::move(u);
    s.right = std::move(v);
    return s;
}

}  // namespace ec
