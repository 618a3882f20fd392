#pragma once

/**
 * @file reptrace.hpp
 * @brief Traces of torsion elements on S^n V_m (optionally twisted by det).
 *
 * Tr(A | S^n V) is the complete homogeneous symmetric polynomial h_n of the
 * eigenvalues, computed in Z[zeta_12]. TraceSequence gives a second route
 * (convolution of per-block sequences) used for cross-checking.
 */

#include "torsion.hpp"

namespace ec {

/// S^n V_m (x) det^e.
struct RepSpec {
    int dim = 1;
    int sym_power = 0;
    int det_twist = 0;  // 0 or 1

    RepSpec() = default;
    RepSpec(int m, int n, int e = 0) : dim(m), sym_power(n), det_twist(e) {
        if (m < 1) throw std::invalid_argument("representation dimension must be >= 1");
        if (n < 0) throw std::invalid_argument("symmetric power must be >= 0");
        if (e != 0 && e != 1) throw std::invalid_argument("det twist exponent must be 0 or 1");
    }

    std::string str() const {
        std::string s = "S^" + std::to_string(sym_power) + " V_" + std::to_string(dim);
        if (det_twist) s += " (x) det";
        return s;
    }
};

inline CyclotomicInt root12(int k) { return CyclotomicInt::zeta(12, k); }

/// h_0 .. h_n of the eigenvalues, via s'_k = s_k + lambda * s'_{k-1}.
inline std::vector<CyclotomicInt> complete_homogeneous_all(const std::vector<int>& eig, int n) {
    std::vector<CyclotomicInt> s(static_cast<std::size_t>(n) + 1, CyclotomicInt(12));
    s[0] = CyclotomicInt::from_int(12, 1);
    for (int k : eig) {
        CyclotomicInt lam = root12(k);
        for (std::size_t d = 1; d < s.size(); ++d) s[d] = s[d] + lam * s[d - 1];
    }
    return s;
}

inline CyclotomicInt complete_homogeneous(const std::vector<int>& eig, int n) {
    return complete_homogeneous_all(eig, n).back();
}

/// Tr(A | S^n V) from the eigenvalues; must be a rational integer.
inline Int trace_sym(const std::vector<int>& eig, int n) {
    if (n < 0) throw std::invalid_argument("symmetric power must be >= 0");
    return complete_homogeneous(eig, n).to_int();
}

/**
 * Tr(block | S^k V) = slope[k mod p] * k + intercept[k mod p].
 *
 * Scalar-free blocks have zero slope; the +-I2 blocks grow linearly.
 */
struct TraceSequence {
    std::string tag;
    int period = 1;
    std::vector<Rational> slope, intercept;

    Int at(int k) const {
        std::size_t r = static_cast<std::size_t>(k % period);
        Rational v = slope[r] * Rational(k) + intercept[r];
        if (!v.is_integer()) throw InvariantViolation("non-integral trace sequence value");
        return v.num();
    }
};

inline int root_order(int k) {
    k = ((k % 12) + 12) % 12;
    return 12 / std::gcd(k, 12);
}

inline TraceSequence make_trace_sequence(const std::string& tag, const std::vector<int>& eig) {
    TraceSequence t;
    t.tag = tag;
    for (int k : eig) t.period = std::lcm(t.period, root_order(k));
    auto h = complete_homogeneous_all(eig, 2 * t.period);
    for (int r = 0; r < t.period; ++r) {
        Rational v0(h[static_cast<std::size_t>(r)].to_int());
        Rational v1(h[static_cast<std::size_t>(r + t.period)].to_int());
        Rational s = (v1 - v0) / Rational(t.period);
        t.slope.push_back(s);
        t.intercept.push_back(v0 - s * Rational(r));
    }
    return t;
}

inline TraceSequence make_trace_sequence(const Block& b) { return make_trace_sequence(b.tag, b.eig); }

/// Trace on S^n of the direct sum: (g * h)(n) = sum_i g(i) h(n - i).
inline Int trace_convolve(const TraceSequence& g, const TraceSequence& h, int n) {
    Int s = 0;
    for (int i = 0; i <= n; ++i) s += g.at(i) * h.at(n - i);
    return s;
}

/// Tr(A^{-1} | S^n V (x) det^e) as an element of Z[zeta_12].
inline CyclotomicInt trace_rep_cyc(const std::vector<int>& eig, const RepSpec& rep) {
    if (static_cast<int>(eig.size()) != rep.dim)
        throw std::invalid_argument("representation dimension " + std::to_string(rep.dim) +
                                    " does not match element dimension " + std::to_string(eig.size()));
    std::vector<int> inv;
    int det = 0;
    for (int k : eig) {
        inv.push_back((12 - ((k % 12) + 12) % 12) % 12);
        det += k;
    }
    CyclotomicInt t = complete_homogeneous(inv, rep.sym_power);
    // det(A^{-1})^e
    if (rep.det_twist) t = t * root12(-det);
    return t;
}

inline Int trace_rep(const std::vector<int>& eig, const RepSpec& rep) { return trace_rep_cyc(eig, rep).to_int(); }
inline Int trace_rep(const TorsionClass& c, const RepSpec& rep) { return trace_rep(c.eigenvalues, rep); }
inline Int trace_rep(const BlockDiagonalClass& f, const RepSpec& rep) { return trace_rep(f.eigenvalues(), rep); }

}  // namespace ec
