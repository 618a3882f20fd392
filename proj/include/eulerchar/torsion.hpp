#pragma once

/**
 * @file torsion.hpp
 * @brief Torsion conjugacy classes, block families and eigenvalue predicates.
 *
 * Roots of unity are written as exponents k of zeta_12 (k mod 12):
 *   1 -> 0, -1 -> 6, i -> 3, -i -> 9, xi3 -> 4, xi3^-1 -> 8, xi6 -> 2, xi6^-1 -> 10.
 */

#include "conjclass.hpp"

#include <map>
#include <optional>

namespace ec {

enum class RingKind { Z, Gauss, Eisenstein };

inline const char* ring_label(RingKind r) {
    switch (r) {
        case RingKind::Z: return "Z";
        case RingKind::Gauss: return "Z[i]";
        case RingKind::Eisenstein: return "Z[xi3]";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Pinned Euler characteristics
// ---------------------------------------------------------------------------

/**
 * Orbifold Euler characteristics used as inputs.
 *
 * chi(SL2(Z)) = zeta(-1) = -1/12 (Harder); chi(SL_l(Z)) = 0 for l >= 3;
 * chi(GL) = chi(SL)/2 since [GL:SL] = 2; chi(G) = 1/|G| for finite G.
 */
namespace chi_const {
inline Rational finite(long order) { return Rational(Int(1), Int(order)); }
inline Rational sl2z() { return Rational(Int(-1), Int(12)); }
inline Rational slz(int l) {
    if (l == 1) return 1;
    if (l == 2) return sl2z();
    return 0;
}
inline Rational glz(int l) { return l == 1 ? finite(2) : slz(l) / Rational(2); }
/// Gamma_1(2,2) has index 3 in GL2(Z).
inline Rational gamma1_2_2() { return Rational(3) * glz(2); }
inline Rational gauss_scalar() { return finite(4); }
inline Rational eisenstein_scalar() { return finite(6); }
}  // namespace chi_const

// ---------------------------------------------------------------------------
// Centralizer descriptors
// ---------------------------------------------------------------------------

struct CentralizerFactor {
    enum Kind { Cyclic, GLZ, Gamma1_2_2 } kind = Cyclic;
    int n = 1;  // order for Cyclic, rank for GLZ

    std::string str() const {
        switch (kind) {
            case Cyclic: return "C" + std::to_string(n);
            case GLZ: return "GL" + std::to_string(n) + "(Z)";
            case Gamma1_2_2: return "Gamma1(2,2)";
        }
        return "?";
    }
    bool finite() const { return kind == Cyclic || (kind == GLZ && n == 1); }
    long order() const { return kind == Cyclic ? n : 2; }
    Rational chi() const {
        switch (kind) {
            case Cyclic: return chi_const::finite(n);
            case GLZ: return chi_const::glz(n);
            case Gamma1_2_2: return chi_const::gamma1_2_2();
        }
        return 0;
    }
};

struct CentralizerDesc {
    std::vector<CentralizerFactor> factors;

    std::string str() const {
        std::string s;
        for (const auto& f : factors) s += (s.empty() ? "" : " x ") + f.str();
        return s;
    }
    bool finite() const {
        return std::all_of(factors.begin(), factors.end(), [](const auto& f) { return f.finite(); });
    }
    long order() const {
        long o = 1;
        for (const auto& f : factors) o *= f.order();
        return o;
    }
    Rational chi() const {
        Rational r = 1;
        for (const auto& f : factors) r *= f.chi();
        return r;
    }
};

// ---------------------------------------------------------------------------
// Explicit catalogs
// ---------------------------------------------------------------------------

/// One conjugacy class of torsion elements.
struct TorsionClass {
    std::string label;
    IntMatrix rep;
    int order = 1;
    std::vector<int> eigenvalues;  // zeta_12 exponents
    CentralizerDesc centralizer;
    Rational chi_c;
    std::optional<Rational> chi_printed;  // differing value from the source table, if any
    std::size_t split = 0;                // size of A11 when rep is 2-block upper triangular
};

struct GroupSpec;

namespace detail {

inline CentralizerDesc cent(std::initializer_list<CentralizerFactor> fs) { return CentralizerDesc{fs}; }
inline CentralizerFactor C(int n) { return {CentralizerFactor::Cyclic, n}; }
inline CentralizerFactor GL(int n) { return {CentralizerFactor::GLZ, n}; }
inline CentralizerFactor G122() { return {CentralizerFactor::Gamma1_2_2, 2}; }

inline const std::vector<TorsionClass>& gl1z_catalog() {
    static const std::vector<TorsionClass> cat = {
        {"+1", int_matrix({{1}}), 1, {0}, cent({GL(1)}), Rational(Int(1), Int(2)), std::nullopt, 0},
        {"-1", int_matrix({{-1}}), 2, {6}, cent({GL(1)}), Rational(Int(1), Int(2)), std::nullopt, 0},
    };
    return cat;
}

inline const std::vector<TorsionClass>& gl2z_catalog() {
    static const Rational q = Rational(Int(1), Int(4));
    static const Rational m24 = Rational(Int(-1), Int(24));
    static const std::vector<TorsionClass> cat = {
        {"a", int_matrix({{1, 0}, {0, 1}}), 1, {0, 0}, cent({GL(2)}), m24, std::nullopt, 0},
        {"b", int_matrix({{-1, 0}, {0, -1}}), 2, {6, 6}, cent({GL(2)}), m24, std::nullopt, 0},
        // the source table prints -1/4 here; 1/|C2 x C2| = +1/4
        {"c1", int_matrix({{1, 0}, {0, -1}}), 2, {0, 6}, cent({C(2), C(2)}), q, -q, 1},
        {"c2", int_matrix({{1, 1}, {0, -1}}), 2, {0, 6}, cent({C(2), C(2)}), q, -q, 1},
        {"d", int_matrix({{0, 1}, {-1, -1}}), 3, {4, 8}, cent({C(6)}), Rational(Int(1), Int(6)), std::nullopt, 0},
        {"e", int_matrix({{0, -1}, {1, 1}}), 6, {2, 10}, cent({C(6)}), Rational(Int(1), Int(6)), std::nullopt, 0},
        {"f", int_matrix({{0, 1}, {-1, 0}}), 4, {3, 9}, cent({C(4)}), q, std::nullopt, 0},
    };
    return cat;
}

inline const std::vector<TorsionClass>& gl3z_catalog() {
    auto r = [](long n, long d) { return Rational(Int(n), Int(d)); };
    static const std::vector<TorsionClass> cat = {
        {"a", int_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 1, {0, 0, 0}, cent({GL(3)}), 0, std::nullopt, 0},
        {"b", int_matrix({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}), 2, {6, 6, 6}, cent({GL(3)}), 0, std::nullopt, 0},
        {"c1", int_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}), 2, {0, 0, 6}, cent({GL(2), GL(1)}), r(-1, 48), std::nullopt, 2},
        {"c2", int_matrix({{1, 0, 1}, {0, 1, 0}, {0, 0, -1}}), 2, {0, 0, 6}, cent({G122(), GL(1)}), r(-1, 16), std::nullopt, 2},
        {"d1", int_matrix({{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}), 2, {6, 6, 0}, cent({GL(2), GL(1)}), r(-1, 48), std::nullopt, 2},
        {"d2", int_matrix({{-1, 0, -1}, {0, -1, 0}, {0, 0, 1}}), 2, {6, 6, 0}, cent({G122(), GL(1)}), r(-1, 16), std::nullopt, 2},
        {"e1", int_matrix({{0, 1, 0}, {-1, -1, 0}, {0, 0, 1}}), 3, {4, 8, 0}, cent({C(6), C(2)}), r(1, 12), std::nullopt, 2},
        {"e2", int_matrix({{0, 1, 1}, {-1, -1, 0}, {0, 0, 1}}), 3, {4, 8, 0}, cent({C(3), C(2)}), r(1, 6), std::nullopt, 2},
        {"f1", int_matrix({{0, -1, 0}, {1, 1, 0}, {0, 0, -1}}), 6, {2, 10, 6}, cent({C(6), C(2)}), r(1, 12), std::nullopt, 2},
        {"f2", int_matrix({{0, -1, -1}, {1, 1, 0}, {0, 0, -1}}), 6, {2, 10, 6}, cent({C(3), C(2)}), r(1, 6), std::nullopt, 2},
        {"g", int_matrix({{0, 1, 0}, {-1, -1, 0}, {0, 0, -1}}), 6, {4, 8, 6}, cent({C(6), C(2)}), r(1, 12), std::nullopt, 2},
        {"h", int_matrix({{0, -1, 0}, {1, 1, 0}, {0, 0, 1}}), 6, {2, 10, 0}, cent({C(6), C(2)}), r(1, 12), std::nullopt, 2},
        {"i1", int_matrix({{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}}), 4, {3, 9, 0}, cent({C(4), C(2)}), r(1, 8), std::nullopt, 2},
        {"i2", int_matrix({{0, 1, 1}, {-1, 0, 0}, {0, 0, 1}}), 4, {3, 9, 0}, cent({C(4), C(2)}), r(1, 8), std::nullopt, 2},
        {"j1", int_matrix({{0, -1, 0}, {1, 0, 0}, {0, 0, -1}}), 4, {3, 9, 6}, cent({C(4), C(2)}), r(1, 8), std::nullopt, 2},
        {"j2", int_matrix({{0, -1, -1}, {1, 0, 0}, {0, 0, -1}}), 4, {3, 9, 6}, cent({C(4), C(2)}), r(1, 8), std::nullopt, 2},
    };
    return cat;
}

}  // namespace detail

/// Complete torsion catalog of GL_m(Z) for m <= 3.
inline const std::vector<TorsionClass>& torsion_catalog(int m) {
    switch (m) {
        case 1: return detail::gl1z_catalog();
        case 2: return detail::gl2z_catalog();
        case 3: return detail::gl3z_catalog();
        default:
            throw std::invalid_argument("no explicit torsion catalog for GL" + std::to_string(m) +
                                        "(Z); use block_families");
    }
}

// ---------------------------------------------------------------------------
// Blocks and block families
// ---------------------------------------------------------------------------

struct Block {
    std::string tag;
    int dim = 1;
    std::vector<int> eig;
    Rational chi;
    IntPoly charpoly;         // Z blocks only
    IntMatrix mat;            // Z blocks only
    CyclotomicInt scalar;     // ring blocks only
};

namespace detail {

inline std::vector<Block> make_z_blocks() {
    auto half = chi_const::finite(2);
    auto gl2 = chi_const::glz(2);
    auto sixth = chi_const::finite(6);
    return {
        {"1", 1, {0}, half, IntPoly{-1, 1}, int_matrix({{1}}), {}},
        {"-1", 1, {6}, half, IntPoly{1, 1}, int_matrix({{-1}}), {}},
        {"I2", 2, {0, 0}, gl2, IntPoly{1, -2, 1}, int_matrix({{1, 0}, {0, 1}}), {}},
        {"-I2", 2, {6, 6}, gl2, IntPoly{1, 2, 1}, int_matrix({{-1, 0}, {0, -1}}), {}},
        {"T3", 2, {4, 8}, sixth, IntPoly{1, 1, 1}, int_matrix({{0, 1}, {-1, -1}}), {}},
        {"T4", 2, {3, 9}, chi_const::finite(4), IntPoly{1, 0, 1}, int_matrix({{0, 1}, {-1, 0}}), {}},
        {"T6", 2, {2, 10}, sixth, IntPoly{1, -1, 1}, int_matrix({{0, -1}, {1, 1}}), {}},
    };
}

inline std::vector<Block> make_gauss_blocks() {
    std::vector<Block> b;
    const char* tags[] = {"1", "-1", "i", "-i"};
    int ks[] = {0, 6, 3, 9};
    for (int j = 0; j < 4; ++j)
        b.push_back({tags[j], 1, {ks[j]}, chi_const::gauss_scalar(), {}, {}, root12_in(4, ks[j])});
    return b;
}

inline std::vector<Block> make_eisenstein_blocks() {
    std::vector<Block> b;
    const char* tags[] = {"1", "xi6", "xi6^2", "-1", "xi6^4", "xi6^5"};
    for (int k = 0; k < 6; ++k)
        b.push_back({tags[k], 1, {2 * k}, chi_const::eisenstein_scalar(), {}, {}, CyclotomicInt::zeta(6, k)});
    return b;
}

}  // namespace detail

/// Canonical block list per ring; block families index into it.
inline const std::vector<Block>& ring_blocks(RingKind r) {
    static const std::vector<Block> z = detail::make_z_blocks();
    static const std::vector<Block> g = detail::make_gauss_blocks();
    static const std::vector<Block> e = detail::make_eisenstein_blocks();
    switch (r) {
        case RingKind::Z: return z;
        case RingKind::Gauss: return g;
        case RingKind::Eisenstein: return e;
    }
    return z;
}

inline int block_index(RingKind r, const std::string& tag) {
    const auto& bs = ring_blocks(r);
    for (std::size_t i = 0; i < bs.size(); ++i)
        if (bs[i].tag == tag) return static_cast<int>(i);
    throw std::invalid_argument(std::string("unknown block tag '") + tag + "' over " + ring_label(r));
}

/// |R(f_i, f_j)| for Z blocks, |N(lambda_i - lambda_j)| for scalar ring blocks.
inline Int block_pair_resultant(RingKind r, int i, int j) {
    const auto& bs = ring_blocks(r);
    const Block& a = bs[static_cast<std::size_t>(i)];
    const Block& b = bs[static_cast<std::size_t>(j)];
    if (r == RingKind::Z) return iabs(resultant(a.charpoly, b.charpoly));
    return iabs((a.scalar - b.scalar).norm_to_Q());
}

/**
 * Block-diagonal torsion element with pairwise coprime diagonal blocks,
 * stored as sorted indices into ring_blocks().
 */
struct BlockDiagonalClass {
    RingKind ring = RingKind::Z;
    std::vector<int> blocks;

    BlockDiagonalClass() = default;
    BlockDiagonalClass(RingKind r, std::vector<int> b) : ring(r), blocks(std::move(b)) {
        std::sort(blocks.begin(), blocks.end());
        for (std::size_t x = 0; x < blocks.size(); ++x)
            for (std::size_t y = x + 1; y < blocks.size(); ++y)
                if (blocks[x] == blocks[y] || block_pair_resultant(ring, blocks[x], blocks[y]) == 0)
                    throw std::invalid_argument("blocks " + label() + " share an eigenvalue");
    }
    static BlockDiagonalClass of(RingKind r, std::initializer_list<const char*> tags) {
        std::vector<int> b;
        for (const char* t : tags) b.push_back(block_index(r, t));
        return BlockDiagonalClass(r, std::move(b));
    }

    const Block& block(std::size_t i) const { return ring_blocks(ring)[static_cast<std::size_t>(blocks[i])]; }

    int dim() const {
        int d = 0;
        for (std::size_t i = 0; i < blocks.size(); ++i) d += block(i).dim;
        return d;
    }
    std::vector<int> eigenvalues() const {
        std::vector<int> e;
        for (std::size_t i = 0; i < blocks.size(); ++i) e.insert(e.end(), block(i).eig.begin(), block(i).eig.end());
        return e;
    }
    std::string label() const {
        std::string s = "[";
        for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? "," : "") + block(i).tag;
        return s + "]";
    }
    /// Block-diagonal integer matrix (Z families only).
    IntMatrix matrix() const {
        if (ring != RingKind::Z) throw std::invalid_argument("integer matrix only for Z families");
        std::size_t n = static_cast<std::size_t>(dim()), off = 0;
        IntMatrix m(n, n, Int(0));
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            const IntMatrix& b = block(i).mat;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c) m(off + r, off + c) = b(r, c);
            off += b.rows();
        }
        return m;
    }
    friend bool operator==(const BlockDiagonalClass& a, const BlockDiagonalClass& b) {
        return a.ring == b.ring && a.blocks == b.blocks;
    }
};

/// All admissible families of total dimension m using only the allowed blocks.
inline std::vector<BlockDiagonalClass> block_families(RingKind r, int m, const std::vector<std::string>& allowed = {}) {
    const auto& bs = ring_blocks(r);
    std::vector<int> pool;
    for (std::size_t i = 0; i < bs.size(); ++i)
        if (allowed.empty() || std::find(allowed.begin(), allowed.end(), bs[i].tag) != allowed.end())
            pool.push_back(static_cast<int>(i));
    std::vector<BlockDiagonalClass> out;
    std::vector<int> cur;
    // subsets in canonical order; each set is visited once
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            if (!cur.empty() || m == 0) out.emplace_back(r, cur);
            return;
        }
        for (std::size_t p = from; p < pool.size(); ++p) {
            int b = pool[p];
            if (bs[static_cast<std::size_t>(b)].dim > left) continue;
            bool ok = true;
            for (int c : cur)
                if (block_pair_resultant(r, c, b) == 0) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(b);
            self(self, p + 1, left - bs[static_cast<std::size_t>(b)].dim);
            cur.pop_back();
        }
    };
    if (m < 0) throw std::invalid_argument("negative dimension");
    rec(rec, 0, m);
    return out;
}

/// Product of pairwise block resultants (1 for a single block).
inline Int resultant_norm(const BlockDiagonalClass& f) {
    Int r = 1;
    for (std::size_t i = 0; i < f.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < f.blocks.size(); ++j) r *= block_pair_resultant(f.ring, f.blocks[i], f.blocks[j]);
    return r;
}

/// chi of C(A) for the block-diagonal A: product of per-block values.
inline Rational chi_centralizer(const BlockDiagonalClass& f) {
    Rational c = 1;
    for (std::size_t i = 0; i < f.blocks.size(); ++i) c *= f.block(i).chi;
    return c;
}

// ---------------------------------------------------------------------------
// Eigenvalue constraints and vanishing bounds
// ---------------------------------------------------------------------------

enum class FieldKind { Q, QI, QXi3, ImagQuadOther, TotallyRealOther, Other };
enum class GroupKind { GL, SL };

/**
 * Whether chi(C(A)) can be nonzero for a torsion A with these eigenvalues.
 */
inline bool eigenvalue_constraint(FieldKind field, GroupKind kind, std::vector<int> eig) {
    std::map<int, int> mult;
    int det = 0;
    for (int& k : eig) {
        k = ((k % 12) + 12) % 12;
        ++mult[k];
        det += k;
    }
    if (kind == GroupKind::SL && det % 12 != 0) return false;
    auto within = [&](std::initializer_list<int> allowed, int cap_pm1, int cap_other) {
        for (auto [k, c] : mult) {
            if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) return false;
            if (c > ((k == 0 || k == 6) ? cap_pm1 : cap_other)) return false;
        }
        return true;
    };
    auto conj_closed = [&] {
        for (auto [k, c] : mult)
            if (mult.count((12 - k) % 12) == 0 || mult.at((12 - k) % 12) != c) return false;
        return true;
    };
    switch (field) {
        case FieldKind::Q:
            return conj_closed() && within({0, 6, 3, 9, 4, 8, 2, 10}, 2, 1);
        case FieldKind::QI:
            return within({0, 6, 3, 9}, 1, 1);
        case FieldKind::QXi3:
            return within({0, 6, 4, 8, 2, 10}, 1, 1);
        case FieldKind::ImagQuadOther:
            return kind == GroupKind::GL && within({0, 6}, 1, 1);
        case FieldKind::TotallyRealOther:
            if (kind == GroupKind::GL) return false;
            if (eig.size() == 1) return eig[0] == 0;
            return eig.size() == 2 && (eig[0] + eig[1]) % 12 == 0;
        case FieldKind::Other:
            return false;
    }
    return false;
}

/// True iff chi_h(Gamma, V) = 0 for every finite-index Gamma and every V.
inline bool vanishing_bound(FieldKind field, GroupKind kind, int m) {
    if (m < 1) throw std::invalid_argument("dimension must be positive");
    if (kind == GroupKind::SL && m == 1) return false;  // trivial group
    switch (field) {
        case FieldKind::Q: return m > 10;
        case FieldKind::QI: return m > 4;
        case FieldKind::QXi3: return m > 6;
        case FieldKind::ImagQuadOther: return kind == GroupKind::GL ? m > 2 : true;
        case FieldKind::TotallyRealOther: return kind == GroupKind::GL ? true : m > 2;
        case FieldKind::Other: return true;
    }
    return true;
}

inline FieldKind field_of(RingKind r) {
    switch (r) {
        case RingKind::Z: return FieldKind::Q;
        case RingKind::Gauss: return FieldKind::QI;
        case RingKind::Eisenstein: return FieldKind::QXi3;
    }
    return FieldKind::Other;
}

}  // namespace ec
