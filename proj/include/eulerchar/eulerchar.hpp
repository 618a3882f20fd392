#pragma once

/**
 * @file eulerchar.hpp
 * @brief Brown-formula summation engines and the closed forms built on them.
 *
 *   chi_h(Gamma, V) = sum over torsion classes of chi(C(A)) * Tr(A^{-1} | V).
 *
 * Grouping classes by their block diagonal turns this into a sum over block
 * families of |R(A)| * chi(C(A)) * Tr(A^{-1} | V).
 */

#include "reptrace.hpp"

namespace ec {

// ---------------------------------------------------------------------------
// Arithmetic functions
// ---------------------------------------------------------------------------

/// Euler phi, multiplicative with phi(p^a) = p^a (1 - 1/p).
inline Int phi(const Int& n) {
    if (n < 1) throw std::domain_error("phi needs N >= 1");
    Int r = 1;
    for (auto [p, a] : factor_u64(to_u64(n, "N"))) {
        Int P(static_cast<unsigned long>(p));
        r *= ipow(P, static_cast<unsigned long>(a - 1)) * (P - 1);
    }
    return r;
}

/// phi2(p^a) = p^{2a} (1 - 1/p^2).
inline Int phi2(const Int& n) {
    if (n < 1) throw std::domain_error("phi2 needs N >= 1");
    Int r = 1;
    for (auto [p, a] : factor_u64(to_u64(n, "N"))) {
        Int P(static_cast<unsigned long>(p));
        r *= ipow(P, static_cast<unsigned long>(2 * a - 2)) * (P * P - 1);
    }
    return r;
}

/// phi_O(p^n) = N(p)^n (1 - 1/N(p)), extended multiplicatively over ideals.
inline Int phi_ring(const CyclotomicInt& gen, QuadRing ring) {
    GaussianFactorization f = gaussian_factor(gen, ring);
    Int r = 1;
    for (const auto& pp : f.prime_powers)
        r *= ipow(pp.residue_norm, static_cast<unsigned long>(pp.exponent - 1)) * (pp.residue_norm - 1);
    return r;
}

inline QuadRing quad_ring_of(RingKind r) {
    if (r == RingKind::Gauss) return QuadRing::Z_i;
    if (r == RingKind::Eisenstein) return QuadRing::Z_xi3;
    throw std::invalid_argument("not a quadratic ring");
}

// ---------------------------------------------------------------------------
// Group specifications
// ---------------------------------------------------------------------------

enum class Family { GLmZ, SLmZ, GLmGauss, GLmEisenstein, Gamma1_Z, Gamma1_Gauss, Gamma1_Eisenstein, SL2TotallyReal };

/**
 * Which arithmetic group. Level hypotheses are enforced by the factories.
 */
struct GroupSpec {
    Family family = Family::GLmZ;
    int m = 2;
    Int level = 1;              // Gamma1 over Z
    CyclotomicInt ideal;        // Gamma1 over Z[i] / Z[xi3]: generator of the level ideal
    std::string field_data_ref; // SL2 over a totally real ring

    static GroupSpec gl(RingKind r, int m) {
        GroupSpec g;
        g.family = r == RingKind::Z ? Family::GLmZ : r == RingKind::Gauss ? Family::GLmGauss : Family::GLmEisenstein;
        g.m = m;
        return g;
    }

    static GroupSpec gamma1_z(int m, const Int& n) {
        if (m < 2 || m > 4) throw std::invalid_argument("Gamma1(m, N) over Z is implemented for m in {2,3,4}");
        if (n < 1) throw std::invalid_argument("level must be positive");
        if (igcd(n, 6) != 1) throw HypothesisError("level must be coprime to 6");
        // torsion in Gamma1 has eigenvalue 1 only when some prime divides N
        if (n == 1) throw HypothesisError("level must be > 1 (Gamma1(m,1) is all of GL_m(Z))");
        GroupSpec g;
        g.family = Family::Gamma1_Z;
        g.m = m;
        g.level = n;
        return g;
    }

    static GroupSpec gamma1_ring(RingKind r, int m, const CyclotomicInt& gen) {
        QuadRing q = quad_ring_of(r);
        int n = ring_conductor(q);
        CyclotomicInt a = gen.conductor() <= 2 ? gen.embed(n) : gen;
        if (a.conductor() != n) throw std::invalid_argument(std::string("ideal generator is not in ") + ring_name(q));
        if (a.is_zero()) throw std::invalid_argument("ideal generator must be nonzero");
        if (m < 1) throw std::invalid_argument("dimension must be positive");
        Int norm = a.norm_to_Q();
        if (norm == 1) throw HypothesisError("level ideal must be proper (norm > 1)");
        if (r == RingKind::Gauss && divides(2, norm))
            throw HypothesisError("level ideal must be coprime to (1+i)");
        if (r == RingKind::Eisenstein) {
            if (divides(3, norm)) throw HypothesisError("level ideal must be coprime to (1-xi3)");
            if (divides(2, norm)) throw HypothesisError("level ideal must be coprime to 2");
        }
        GroupSpec g;
        g.family = r == RingKind::Gauss ? Family::Gamma1_Gauss : Family::Gamma1_Eisenstein;
        g.m = m;
        g.ideal = a;
        return g;
    }
};

/// block_families keyed by group; Gamma1 groups return their eigenvalue-1-anchored families.
inline std::vector<BlockDiagonalClass> block_families(const GroupSpec& g) {
    switch (g.family) {
        case Family::GLmZ: return block_families(RingKind::Z, g.m);
        case Family::GLmGauss: return block_families(RingKind::Gauss, g.m);
        case Family::GLmEisenstein: return block_families(RingKind::Eisenstein, g.m);
        default: throw std::invalid_argument("block families are defined for GL_m groups only");
    }
}

// ---------------------------------------------------------------------------
// Engines
// ---------------------------------------------------------------------------

namespace detail {

// Exact accumulator for sum of rational * cyclotomic terms.
struct CycRationalSum {
    std::vector<Rational> c = std::vector<Rational>(4);

    void add(const Rational& w, const CyclotomicInt& x) {
        const auto& xs = x.coeffs();
        for (std::size_t i = 0; i < xs.size(); ++i) c[i] += w * Rational(xs[i]);
    }
    Rational value() const {
        for (std::size_t i = 1; i < c.size(); ++i)
            if (!c[i].is_zero()) throw InvariantViolation("Euler characteristic sum is not rational");
        return c[0];
    }
};

inline Rational family_sum(const std::vector<BlockDiagonalClass>& fams, const RepSpec& rep,
                           const std::vector<int>& extra_eig = {}) {
    CycRationalSum acc;
    for (const auto& f : fams) {
        std::vector<int> e = f.eigenvalues();
        e.insert(e.end(), extra_eig.begin(), extra_eig.end());
        acc.add(Rational(resultant_norm(f)) * chi_centralizer(f), trace_rep_cyc(e, rep));
    }
    return acc.value();
}

}  // namespace detail

/**
 * chi_h(GL_m(O), S^n V_m (x) det^e) by the block-family sum.
 *
 * Returns 0 directly past the vanishing bound for the field.
 */
inline Rational chi_h_glm(RingKind ring, int m, const RepSpec& rep) {
    if (rep.dim != m)
        throw std::invalid_argument("representation dimension " + std::to_string(rep.dim) + " != m = " + std::to_string(m));
    if (vanishing_bound(field_of(ring), GroupKind::GL, m)) return 0;
    return detail::family_sum(block_families(ring, m), rep);
}

/// Same sum over Z, pairing each family F with -F (same |R| and chi; the trace picks up a sign).
inline Rational chi_h_glm_paired(int m, const RepSpec& rep) {
    if (rep.dim != m) throw std::invalid_argument("representation dimension mismatch");
    if (vanishing_bound(FieldKind::Q, GroupKind::GL, m)) return 0;
    auto fams = block_families(RingKind::Z, m);
    auto negate = [](const BlockDiagonalClass& f) {
        static const std::map<std::string, std::string> neg = {
            {"1", "-1"}, {"-1", "1"}, {"I2", "-I2"}, {"-I2", "I2"}, {"T3", "T6"}, {"T6", "T3"}, {"T4", "T4"}};
        std::vector<int> b;
        for (std::size_t i = 0; i < f.blocks.size(); ++i) b.push_back(block_index(RingKind::Z, neg.at(f.block(i).tag)));
        return BlockDiagonalClass(RingKind::Z, b);
    };
    // (-A)^{-1} on S^n V (x) det^e carries the sign (-1)^(n + m e)
    int sign = ((rep.sym_power + m * rep.det_twist) % 2) ? -1 : 1;
    Rational total = 0;
    std::vector<bool> used(fams.size(), false);
    for (std::size_t i = 0; i < fams.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        BlockDiagonalClass g = negate(fams[i]);
        Rational term = Rational(resultant_norm(fams[i])) * chi_centralizer(fams[i]) * Rational(trace_rep(fams[i], rep));
        if (g == fams[i]) {
            total += term;
            continue;
        }
        for (std::size_t j = i + 1; j < fams.size(); ++j)
            if (!used[j] && fams[j] == g) { used[j] = true; break; }
        total += Rational(1 + sign) * term;
    }
    return total;
}

/// Raw Brown sum over an explicit catalog.
inline Rational brown_sum(const std::vector<TorsionClass>& classes, const RepSpec& rep) {
    detail::CycRationalSum acc;
    for (const auto& c : classes) acc.add(c.chi_c, trace_rep_cyc(c.eigenvalues, rep));
    return acc.value();
}

/**
 * Gamma1(m, N) in GL_m(Z), gcd(N, 6) = 1:
 *   phi(N)  * sum over A = [A1, 1]  of |R(A)| chi(C(A)) Tr(A^{-1}|V)
 * + phi2(N) * sum over A = [A2, I2] of the same,
 * with A1, A2 built from {-1, -I2, T3, T4, T6} and chi taken in GL_m(Z).
 */
inline Rational chi_h_gamma1_z(int m, const Int& n, const RepSpec& rep) {
    GroupSpec g = GroupSpec::gamma1_z(m, n);
    if (rep.dim != m) throw std::invalid_argument("representation dimension mismatch");
    const std::vector<std::string> no_one = {"-1", "-I2", "T3", "T4", "T6"};
    // block_families(.., 0, ..) yields the single empty family
    auto with = [&](const std::string& tag, int d) {
        std::vector<BlockDiagonalClass> out;
        for (auto f : block_families(RingKind::Z, m - d, no_one)) {
            f.blocks.push_back(block_index(RingKind::Z, tag));
            out.emplace_back(RingKind::Z, f.blocks);
        }
        return out;
    };
    Rational s1 = detail::family_sum(with("1", 1), rep);
    Rational s2 = detail::family_sum(with("I2", 2), rep);
    return Rational(phi(g.level)) * s1 + Rational(phi2(g.level)) * s2;
}

/**
 * Gamma1(m, a) in GL_m(Z[i]) or GL_m(Z[xi3]):
 *   phi_O(a) * sum over A = [A0, 1] of |N(R(A))| chi(C(A)) Tr(A^{-1}|V),
 * A0 made of distinct scalars different from 1.
 */
inline Rational chi_h_gamma1_ring(RingKind ring, int m, const CyclotomicInt& gen, const RepSpec& rep) {
    GroupSpec g = GroupSpec::gamma1_ring(ring, m, gen);
    if (rep.dim != m) throw std::invalid_argument("representation dimension mismatch");
    if (vanishing_bound(field_of(ring), GroupKind::GL, m)) return 0;
    std::vector<std::string> no_one;
    for (const auto& b : ring_blocks(ring))
        if (b.tag != "1") no_one.push_back(b.tag);
    std::vector<BlockDiagonalClass> fams;
    for (auto f : block_families(ring, m - 1, no_one)) {
        f.blocks.push_back(block_index(ring, "1"));
        fams.emplace_back(ring, f.blocks);
    }
    return Rational(phi_ring(g.ideal, quad_ring_of(ring))) * detail::family_sum(fams, rep);
}

/// Aut(P) for a rank-2 projective P over an imaginary quadratic ring (d != 3, 4):
/// n * Tr([1,-1] | V), with n the caller-supplied number of ordered splittings.
inline Rational chi_h_aut_p(long n, const RepSpec& rep) {
    if (n < 0) throw std::invalid_argument("splitting count must be >= 0");
    if (rep.dim != 2) throw std::invalid_argument("Aut(P) acts on rank 2");
    return Rational(n) * Rational(trace_rep(std::vector<int>{0, 6}, rep));
}

}  // namespace ec
