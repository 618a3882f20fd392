#include <eulerchar/conjclass.hpp>
#include <eulerchar/torsion.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace ec;

namespace {

const IntMatrix I2 = IntMatrix::identity(2);
const IntMatrix T3 = int_matrix({{0, 1}, {-1, -1}});
const IntMatrix ONE = int_matrix({{1}});
const IntMatrix NEG = int_matrix({{-1}});

std::multiset<std::size_t> orbit_sizes(const OrbitDecomposition& d) {
    std::multiset<std::size_t> s;
    for (const auto& o : d.orbits) s.insert(o.size);
    return s;
}

// All 4 elements of (+-I2) x (+-1) as generators.
std::vector<CentralizerPair> signs() { return {{-I2, ONE}, {I2, NEG}}; }

}  // namespace

TEST(QMod, KnownValues) {
    QMod a = qmod(I2, NEG);
    EXPECT_EQ(a.size(), 4u);
    EXPECT_EQ(a.moduli, (std::vector<Int>{2, 2}));
    EXPECT_EQ(qmod(T3, ONE).size(), 3u);
    EXPECT_EQ(qmod(T3, NEG).size(), 1u);
    try {
        qmod(T3, T3);
        FAIL();
    } catch (const std::domain_error& e) {
        EXPECT_STREQ(e.what(), "singular Sylvester operator");
    }
}

TEST(QMod, CardinalityIsResultant) {
    const auto& bs = ring_blocks(RingKind::Z);
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = 0; j < bs.size(); ++j) {
            Int r = iabs(resultant(bs[i].charpoly, bs[j].charpoly));
            if (r == 0) continue;
            QMod q = qmod(bs[i].mat, bs[j].mat);
            EXPECT_EQ(Int(static_cast<unsigned long>(q.size())), r) << bs[i].tag << " " << bs[j].tag;
        }
}

TEST(QMod, CoordinatesAreReducedAndLiftRoundTrips) {
    QMod q = qmod(-I2, IntMatrix::identity(2));  // (Z/2)^4, the largest catalog case
    EXPECT_EQ(q.size(), 16u);
    for (std::size_t i = 0; i < q.size(); ++i) {
        auto c = q.coords_of(i);
        EXPECT_EQ(q.index_of(c), i);
        EXPECT_EQ(q.coords(q.lift(c)), c);
        for (std::size_t k = 0; k < c.size(); ++k) {
            EXPECT_GE(c[k], 0);
            EXPECT_LT(c[k], q.moduli[k]);
        }
    }
}

TEST(QMod, ImageOfSylvesterIsZero) {
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> d(-9, 9);
    QMod q = qmod(T3, ONE);
    for (int t = 0; t < 100; ++t) {
        IntMatrix x(2, 1, Int(0));
        x(0, 0) = d(rng);
        x(1, 0) = d(rng);
        auto c = q.coords(x * ONE - T3 * x);
        EXPECT_TRUE(std::all_of(c.begin(), c.end(), [](const Int& v) { return v == 0; }));
    }
}

TEST(Action, ModuleIdentityOnRandomBlocks) {
    // (B11, B22) . P(X) = P(B11 X B22^{-1}) for B in the centralizers
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> d(-5, 5);
    IntMatrix a11 = I2, a22 = NEG;
    for (const auto& [b11, b22] : fiber_generators(a11, a22)) {
        IntMatrix b22i = inverse_unimodular(b22);
        for (int t = 0; t < 20; ++t) {
            IntMatrix x(2, 1, Int(0));
            x(0, 0) = d(rng);
            x(1, 0) = d(rng);
            IntMatrix px = x * a22 - a11 * x;
            IntMatrix y = b11 * x * b22i;
            EXPECT_EQ(b11 * px * b22i, y * a22 - a11 * y);
        }
    }
}

TEST(Orbits, KnownValues) {
    QMod a = qmod(I2, NEG);
    auto da = orbits(a, fiber_generators(I2, NEG));
    EXPECT_EQ(orbit_sizes(da), (std::multiset<std::size_t>{1, 3}));
    EXPECT_EQ(da.orbits[0].rep, (std::vector<Int>{0, 0}));

    QMod b = qmod(T3, ONE);
    EXPECT_EQ(orbit_sizes(orbits(b, signs())), (std::multiset<std::size_t>{1, 2}));

    auto none = orbits(a, {});
    EXPECT_EQ(none.orbits.size(), a.size());
}

TEST(Orbits, NonCommutingGeneratorRejected) {
    QMod q = qmod(T3, ONE);
    EXPECT_THROW(orbits(q, {{int_matrix({{1, 1}, {0, 1}}), ONE}}), std::invalid_argument);
}

TEST(Orbits, RepresentativesAreLexLeastAndSizesSum) {
    const auto& bs = ring_blocks(RingKind::Z);
    for (const auto& x : bs)
        for (const auto& y : bs) {
            if (resultant(x.charpoly, y.charpoly) == 0) continue;
            QMod q = qmod(x.mat, y.mat);
            auto gens = fiber_generators(x.mat, y.mat);
            auto d = orbits(q, gens);
            std::size_t total = 0;
            for (const auto& o : d.orbits) {
                total += o.size;
                EXPECT_EQ(stabilizer_index(q, gens, o.rep), o.size);
            }
            EXPECT_EQ(total, q.size());
            // every point's orbit has a representative not larger than it
            for (std::size_t i = 0; i < q.size(); ++i) {
                std::size_t best = q.size();
                FiniteAction act = make_action(q, gens);
                std::vector<bool> seen(q.size(), false);
                std::vector<std::size_t> st{i};
                seen[i] = true;
                while (!st.empty()) {
                    std::size_t p = st.back();
                    st.pop_back();
                    best = std::min(best, p);
                    for (const auto& g : act.generators)
                        if (!seen[g[p]]) { seen[g[p]] = true; st.push_back(g[p]); }
                }
                bool is_rep = false;
                for (const auto& o : d.orbits) is_rep |= q.index_of(o.rep) == best;
                EXPECT_TRUE(is_rep);
            }
        }
}

TEST(Orbits, IndependentOfGeneratorOrder) {
    QMod q = qmod(I2, NEG);
    auto g = fiber_generators(I2, NEG);
    auto ref = orbit_sizes(orbits(q, g));
    std::mt19937 rng(4);
    for (int t = 0; t < 10; ++t) {
        std::shuffle(g.begin(), g.end(), rng);
        EXPECT_EQ(orbit_sizes(orbits(q, g)), ref);
    }
    // a second presentation: conjugate the blocks by a unimodular P and map generators along
    IntMatrix p = int_matrix({{2, 1}, {1, 1}}), pi = inverse_unimodular(p);
    IntMatrix a11 = p * I2 * pi;
    std::vector<CentralizerPair> g2;
    for (const auto& [b11, b22] : fiber_generators(I2, NEG)) g2.emplace_back(p * b11 * pi, b22);
    EXPECT_EQ(orbit_sizes(orbits(qmod(a11, NEG), g2)), ref);
}

TEST(Stabilizer, KnownValues) {
    QMod a = qmod(I2, NEG);
    auto g = fiber_generators(I2, NEG);
    EXPECT_EQ(stabilizer_index(a, g, {0, 0}), 1u);
    EXPECT_EQ(stabilizer_index(a, g, {1, 0}), 3u);
    QMod b = qmod(T3, ONE);
    EXPECT_EQ(stabilizer_index(b, signs(), {1}), 2u);
    EXPECT_THROW(stabilizer_index(b, signs(), {5}), std::invalid_argument);
}

TEST(FiberSum, KnownValues) {
    auto r = [](long n, long d) { return Rational(Int(n), Int(d)); };
    EXPECT_EQ(chi_sum_over_fiber(r(-1, 24), r(1, 2), 4), r(-1, 12));
    EXPECT_EQ(chi_sum_over_fiber(r(3, 7), r(2, 5), 1), r(6, 35));
    EXPECT_EQ(chi_sum_over_fiber(r(1, 6), r(1, 2), 3), r(1, 4));
}

TEST(FiberSum, OrbitStabilizerRecoversResultantIdentity) {
    // sum over orbits of size * chi11 * chi22 = |Q| * chi11 * chi22, for every GL3 block pair
    const auto& bs = ring_blocks(RingKind::Z);
    for (const auto& x : bs)
        for (const auto& y : bs) {
            if (x.dim != 2 || y.dim != 1 || resultant(x.charpoly, y.charpoly) == 0) continue;
            QMod q = qmod(x.mat, y.mat);
            Rational s = 0;
            for (const auto& o : orbits(q, fiber_generators(x.mat, y.mat)).orbits)
                s += Rational(static_cast<long>(o.size)) * x.chi * y.chi;
            EXPECT_EQ(s, chi_sum_over_fiber(x.chi, y.chi, iabs(resultant(x.charpoly, y.charpoly))));
        }
}
