#pragma once

/**
 * @file conjclass.hpp
 * @brief Off-diagonal blocks of block upper-triangular torsion matrices.
 *
 * For A = [[A11, A12], [0, A22]] with A11, A22 sharing no eigenvalue, the
 * conjugacy class of A over Z is determined by the class of A12 in the
 * finite cokernel Q of X -> X*A22 - A11*X, up to the action
 * (B11, B22) . X = B11 * X * B22^{-1} of the two centralizers.
 */

#include "polymat.hpp"

#include <deque>
#include <limits>

namespace ec {

/**
 * Cokernel of the Sylvester operator, presented via its Smith form.
 *
 * A column-stacked block x maps to coordinates (U x)_i mod d_i over the
 * nontrivial invariant factors d_i > 1.
 */
struct QMod {
    IntMatrix a11, a22;
    SmithForm snf;
    std::vector<Int> moduli;
    IntMatrix coord_map;     // rows of U for the nontrivial factors
    IntMatrix lift_map;      // matching columns of U^{-1}
    std::size_t m1 = 0, m2 = 0;

    std::size_t size() const {
        std::size_t n = 1;
        for (const auto& d : moduli) n *= d.get_ui();
        return n;
    }

    /// Reduced coordinates of an off-diagonal block (m1 x m2).
    std::vector<Int> coords(const IntMatrix& x) const {
        if (x.rows() != m1 || x.cols() != m2) throw std::invalid_argument("off-diagonal block has wrong shape");
        std::vector<Int> y = mat_vec(coord_map, vec(x));
        for (std::size_t i = 0; i < y.size(); ++i) {
            mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), moduli[i].get_mpz_t());
        }
        return y;
    }

    /// Some block whose class has the given coordinates.
    IntMatrix lift(const std::vector<Int>& c) const {
        std::vector<Int> x = mat_vec(lift_map, c);
        return unvec(x, m1, m2);
    }

    // Mixed radix, first coordinate most significant, so index order is
    // lexicographic order on coordinates.
    std::size_t index_of(const std::vector<Int>& c) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < c.size(); ++i) idx = idx * moduli[i].get_ui() + c[i].get_ui();
        return idx;
    }
    std::vector<Int> coords_of(std::size_t idx) const {
        std::vector<Int> c(moduli.size());
        for (std::size_t i = moduli.size(); i-- > 0;) {
            unsigned long d = moduli[i].get_ui();
            c[i] = static_cast<unsigned long>(idx % d);
            idx /= d;
        }
        return c;
    }
};

/// Q for the pair (A11, A22); fails if they share an eigenvalue.
inline QMod qmod(const IntMatrix& a11, const IntMatrix& a22) {
    if (!a11.square() || !a22.square()) throw std::invalid_argument("diagonal blocks must be square");
    if (resultant(char_poly(a11), char_poly(a22)) == 0) throw std::domain_error("singular Sylvester operator");
    QMod q;
    q.a11 = a11;
    q.a22 = a22;
    q.m1 = a11.rows();
    q.m2 = a22.rows();
    IntMatrix p = sylvester_op(a11, a22);
    q.snf = smith_normal_form(p);
    IntMatrix uinv = inverse_unimodular(q.snf.left);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < q.snf.diag.size(); ++i)
        if (q.snf.diag[i] != 1) keep.push_back(i);
    std::size_t n = p.rows();
    q.coord_map = IntMatrix(keep.size(), n, Int(0));
    q.lift_map = IntMatrix(n, keep.size(), Int(0));
    for (std::size_t k = 0; k < keep.size(); ++k) {
        q.moduli.push_back(q.snf.diag[keep[k]]);
        if (!mpz_fits_ulong_p(q.moduli.back().get_mpz_t()) || q.moduli.back() > 1000000)
            throw std::out_of_range("Q is too large to enumerate");
        for (std::size_t j = 0; j < n; ++j) {
            q.coord_map(k, j) = q.snf.left(keep[k], j);
            q.lift_map(j, k) = uinv(j, keep[k]);
        }
    }
    return q;
}

/// Permutations of Q induced by centralizer pairs.
struct FiniteAction {
    std::vector<std::vector<std::size_t>> generators;
    std::size_t element_count = 0;
};

using CentralizerPair = std::pair<IntMatrix, IntMatrix>;

inline FiniteAction make_action(const QMod& q, const std::vector<CentralizerPair>& gens) {
    FiniteAction act;
    act.element_count = q.size();
    for (const auto& [b11, b22] : gens) {
        if (b11 * q.a11 != q.a11 * b11 || b22 * q.a22 != q.a22 * b22)
            throw std::invalid_argument("generator does not commute with the diagonal blocks");
        IntMatrix b22inv = inverse_unimodular(b22);
        std::vector<std::size_t> perm(act.element_count);
        std::vector<bool> hit(act.element_count, false);
        for (std::size_t i = 0; i < act.element_count; ++i) {
            IntMatrix x = q.lift(q.coords_of(i));
            std::size_t j = q.index_of(q.coords(b11 * x * b22inv));
            if (hit[j]) throw InvariantViolation("generator does not act bijectively on Q");
            hit[j] = true;
            perm[i] = j;
        }
        act.generators.push_back(std::move(perm));
    }
    return act;
}

struct Orbit {
    std::vector<Int> rep;  // lexicographically least coordinates
    std::size_t size = 0;
};

struct OrbitDecomposition {
    std::vector<Orbit> orbits;
};

/// Orbit partition by breadth-first closure under the generators.
inline OrbitDecomposition orbits(const QMod& q, const std::vector<CentralizerPair>& gens) {
    FiniteAction act = make_action(q, gens);
    OrbitDecomposition out;
    std::vector<bool> seen(act.element_count, false);
    for (std::size_t s = 0; s < act.element_count; ++s) {
        if (seen[s]) continue;
        std::deque<std::size_t> todo{s};
        seen[s] = true;
        std::size_t count = 0;
        while (!todo.empty()) {
            std::size_t x = todo.front();
            todo.pop_front();
            ++count;
            for (const auto& g : act.generators)
                if (!seen[g[x]]) { seen[g[x]] = true; todo.push_back(g[x]); }
        }
        // s is the first unseen index, hence the least element of its orbit
        out.orbits.push_back({q.coords_of(s), count});
    }
    return out;
}

/// Orbit size of a point = index of its stabilizer in C(A11) x C(A22).
inline std::size_t stabilizer_index(const QMod& q, const std::vector<CentralizerPair>& gens,
                                    const std::vector<Int>& point) {
    for (std::size_t i = 0; i < point.size(); ++i)
        if (point[i] < 0 || point[i] >= q.moduli[i]) throw std::invalid_argument("point is not reduced");
    FiniteAction act = make_action(q, gens);
    std::size_t start = q.index_of(point);
    std::vector<bool> seen(act.element_count, false);
    std::deque<std::size_t> todo{start};
    seen[start] = true;
    std::size_t count = 0;
    while (!todo.empty()) {
        std::size_t x = todo.front();
        todo.pop_front();
        ++count;
        for (const auto& g : act.generators)
            if (!seen[g[x]]) { seen[g[x]] = true; todo.push_back(g[x]); }
    }
    return count;
}

/// Lexicographically least point in the orbit of `point`.
inline std::vector<Int> orbit_representative(const QMod& q, const std::vector<CentralizerPair>& gens,
                                             const std::vector<Int>& point) {
    FiniteAction act = make_action(q, gens);
    std::size_t start = q.index_of(point), best = start;
    std::vector<bool> seen(act.element_count, false);
    std::deque<std::size_t> todo{start};
    seen[start] = true;
    while (!todo.empty()) {
        std::size_t x = todo.front();
        todo.pop_front();
        best = std::min(best, x);
        for (const auto& g : act.generators)
            if (!seen[g[x]]) { seen[g[x]] = true; todo.push_back(g[x]); }
    }
    return q.coords_of(best);
}

/// Generators of GL2(Z): S, T and a reflection.
inline std::vector<IntMatrix> gl2z_generators() {
    return {int_matrix({{0, -1}, {1, 0}}), int_matrix({{1, 1}, {0, 1}}), int_matrix({{1, 0}, {0, -1}})};
}

/**
 * Generators of C(A) in GL_d(Z) for the diagonal blocks that occur:
 * +-1 (C(A) = GL1(Z)), +-I2 (GL2(Z)), and T3, T4, T6 (C(A) = <A, -I2>).
 */
inline std::vector<IntMatrix> centralizer_generators(const IntMatrix& a) {
    if (!a.square()) throw std::invalid_argument("centralizer of non-square block");
    if (a.rows() == 1) return {int_matrix({{-1}})};
    if (a.rows() != 2) throw std::invalid_argument("centralizer generators only for blocks of size <= 2");
    if (a == IntMatrix::identity(2) || a == -IntMatrix::identity(2)) return gl2z_generators();
    IntMatrix f = a;
    for (int k = 1; k <= 12 && f != IntMatrix::identity(2); ++k) f = f * a;
    if (f != IntMatrix::identity(2)) throw std::invalid_argument("block is not of finite order");
    return {a, -IntMatrix::identity(2)};
}

/// (B, I) for B in gens C(A11), (I, B) for B in gens C(A22).
inline std::vector<CentralizerPair> fiber_generators(const IntMatrix& a11, const IntMatrix& a22) {
    std::vector<CentralizerPair> out;
    for (auto& g : centralizer_generators(a11)) out.emplace_back(g, IntMatrix::identity(a22.rows()));
    for (auto& g : centralizer_generators(a22)) out.emplace_back(IntMatrix::identity(a11.rows()), g);
    return out;
}

/// Sum of chi(C(A)) over the fiber above (A11, A22): |R| * chi11 * chi22.
inline Rational chi_sum_over_fiber(const Rational& chi11, const Rational& chi22, const Int& resultant_norm) {
    if (resultant_norm < 1) throw std::invalid_argument("resultant norm must be positive");
    return Rational(resultant_norm) * chi11 * chi22;
}

}  // namespace ec
