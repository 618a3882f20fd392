#include <eulerchar/reptrace.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace ec;

namespace {

std::vector<int> eig_of(const char* tag) { return ring_blocks(RingKind::Z)[static_cast<std::size_t>(block_index(RingKind::Z, tag))].eig; }

std::vector<int> merge(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<int> negate(std::vector<int> e) {
    for (auto& k : e) k = (k + 6) % 12;
    return e;
}

long binom(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST(TraceSym, KnownValues) {
    for (int n = 0; n <= 24; ++n) EXPECT_EQ(trace_sym({0, 0}, n), n + 1);
    EXPECT_EQ(trace_sym(eig_of("T6"), 3), -1);
    EXPECT_EQ(trace_sym(eig_of("T4"), 2), -1);
    EXPECT_THROW(trace_sym({0}, -1), std::invalid_argument);
}

TEST(TraceSym, NonIntegralIsAnInvariantViolation) {
    // a lone primitive cube root of unity is not closed under conjugation
    EXPECT_THROW(trace_sym({4}, 1), InvariantViolation);
}

TEST(TraceConvolve, KnownValues) {
    auto t3 = make_trace_sequence("T3", eig_of("T3"));
    auto one = make_trace_sequence("1", eig_of("1"));
    auto i2 = make_trace_sequence("I2", eig_of("I2"));
    auto neg = make_trace_sequence("-1", eig_of("-1"));
    auto t6 = make_trace_sequence("T6", eig_of("T6"));
    for (int k = 0; k <= 8; ++k) EXPECT_EQ(trace_convolve(t3, one, 3 * k), 1);
    for (int k = 0; k <= 10; ++k) EXPECT_EQ(trace_convolve(i2, neg, 2 * k + 1), k + 1);
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(trace_convolve(t6, one, 6 * k + 2), 2);
}

TEST(TraceConvolve, AgreesWithTraceSymOnAllBlockPairs) {
    const auto& bs = ring_blocks(RingKind::Z);
    for (const auto& a : bs)
        for (const auto& b : bs) {
            auto ga = make_trace_sequence(a), gb = make_trace_sequence(b);
            for (int n = 0; n <= 24; ++n)
                EXPECT_EQ(trace_convolve(ga, gb, n), trace_sym(merge(a.eig, b.eig), n)) << a.tag << " " << b.tag << " " << n;
        }
}

TEST(TraceSequence, AffinePeriodicFormReproducesValues) {
    for (const auto& b : ring_blocks(RingKind::Z)) {
        auto s = make_trace_sequence(b);
        for (int n = 0; n <= 60; ++n) EXPECT_EQ(s.at(n), trace_sym(b.eig, n)) << b.tag << " " << n;
        bool scalar = b.tag == "I2" || b.tag == "-I2";
        for (const auto& sl : s.slope) EXPECT_EQ(sl.is_zero(), !scalar) << b.tag;
    }
}

TEST(TraceRep, KnownValues) {
    BlockDiagonalClass f = BlockDiagonalClass::of(RingKind::Z, {"T3", "T4"});
    EXPECT_EQ(trace_rep(f, RepSpec(4, 3)), 2);
    for (int m = 1; m <= 4; ++m)
        for (int n = 0; n <= 12; ++n) EXPECT_EQ(trace_rep(std::vector<int>(static_cast<std::size_t>(m), 0), RepSpec(m, n)), binom(n + m - 1, m - 1));
    // [i^k, i^(k+1)] in GL2(Z[i]) on S^{4n} V2
    for (int k = 0; k < 4; ++k)
        for (int n = 0; n <= 6; ++n)
            EXPECT_EQ(trace_rep_cyc({3 * k % 12, 3 * (k + 1) % 12}, RepSpec(2, 4 * n)), CyclotomicInt::from_int(12, 1));
    EXPECT_THROW(trace_rep(f, RepSpec(3, 1)), std::invalid_argument);
}

TEST(TraceRep, RepSpecValidation) {
    EXPECT_THROW(RepSpec(0, 1), std::invalid_argument);
    EXPECT_THROW(RepSpec(2, -1), std::invalid_argument);
    EXPECT_THROW(RepSpec(2, 1, 2), std::invalid_argument);
    EXPECT_EQ(RepSpec(2, 10, 1).str(), "S^10 V_2 (x) det");
}

TEST(TraceOracle, CatalogClassesAgainstExplicitSymmetricPowerMatrix) {
    for (int m = 1; m <= 3; ++m)
        for (const auto& c : torsion_catalog(m)) {
            auto a = oracle::from(c.rep);
            // A^{-1} = A^{order-1}, computed without the library
            auto ainv = oracle::eye(a.size());
            for (int k = 1; k < c.order; ++k) ainv = oracle::mul(ainv, a);
            for (int n = 0; n <= 12; ++n) {
                EXPECT_EQ(trace_sym(c.eigenvalues, n), oracle::sym_power_trace(a, n)) << c.label << " n=" << n;
                EXPECT_EQ(trace_rep(c, RepSpec(m, n)), oracle::sym_power_trace(ainv, n)) << c.label << " n=" << n;
            }
        }
}

TEST(TraceOracle, DetTwistMultipliesByInverseDeterminant) {
    for (const auto& c : torsion_catalog(2)) {
        long d = det(c.rep).get_si();
        for (int n = 0; n <= 24; ++n) EXPECT_EQ(trace_rep(c, RepSpec(2, n, 1)), d * trace_rep(c, RepSpec(2, n, 0)));
    }
}

TEST(TraceProperties, Parity) {
    for (int m = 1; m <= 3; ++m)
        for (const auto& c : torsion_catalog(m))
            for (int n = 0; n <= 24; ++n)
                EXPECT_EQ(trace_sym(negate(c.eigenvalues), n), (n % 2 ? -1 : 1) * trace_sym(c.eigenvalues, n)) << c.label;
}

TEST(TraceProperties, InversionInvarianceOverZ) {
    for (int m = 1; m <= 3; ++m)
        for (const auto& c : torsion_catalog(m))
            for (int n = 0; n <= 24; ++n) EXPECT_EQ(trace_rep(c, RepSpec(m, n)), trace_sym(c.eigenvalues, n)) << c.label;
    for (int m = 1; m <= 6; ++m)
        for (const auto& f : block_families(RingKind::Z, m))
            for (int n = 0; n <= 24; ++n) EXPECT_EQ(trace_rep(f, RepSpec(m, n)), trace_sym(f.eigenvalues(), n));
}
