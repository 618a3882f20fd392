#include <eulerchar/zetam1.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace ec;

namespace {

Rational R(long n, long d = 1) { return Rational(Int(n), Int(d)); }

FieldData bundled(const std::string& name) { return load_field_data(resolve_field_data(name)); }

std::string expect_data_error(const std::string& text) {
    try {
        parse_field_data(text, "t.yaml");
    } catch (const DataError& e) {
        return e.what();
    }
    ADD_FAILURE() << "expected a data error";
    return "";
}

}  // namespace

TEST(Contribution, BundledFields) {
    EXPECT_EQ(torsion_contribution(bundled("Q")), R(7, 6));
    EXPECT_EQ(torsion_contribution(bundled("Q_sqrt5")), R(8, 5) + R(4, 3) + R(1));
    EXPECT_EQ(torsion_contribution(bundled("Q_sqrt5")), R(59, 15));
}

TEST(Solve, BundledFieldsBothDirections) {
    FieldData q = bundled("Q"), k = bundled("Q_sqrt5");
    EXPECT_EQ(solve_identity(q, {R(1), std::nullopt}), R(-1, 12));
    EXPECT_EQ(solve_identity(k, {R(4), std::nullopt}), R(1, 30));
    EXPECT_EQ(solve_identity(q, {std::nullopt, R(-1, 12)}), R(1));
    EXPECT_EQ(solve_identity(k, {std::nullopt, R(1, 30)}), R(4));
    // the shipped files carry the known values too
    EXPECT_EQ(*q.zeta_minus_one, R(-1, 12));
    EXPECT_EQ(*k.chi_h, R(4));
}

TEST(Solve, RoundTrip) {
    FieldData k = bundled("Q_sqrt5");
    std::mt19937 rng(1);
    std::uniform_int_distribution<long> d(-100, 100), den(1, 60);
    for (int t = 0; t < 200; ++t) {
        Rational z = R(d(rng), den(rng));
        Rational c = solve_identity(k, {std::nullopt, z});
        EXPECT_EQ(solve_identity(k, {c, std::nullopt}), z);
    }
}

TEST(Solve, ExactlyOneGiven) {
    FieldData q = bundled("Q");
    EXPECT_THROW(solve_identity(q, {}), UsageError);
    EXPECT_THROW(solve_identity(q, {R(1), R(1)}), UsageError);
}

TEST(Integrality, Examples) {
    EXPECT_TRUE(integrality_check(bundled("Q_sqrt5"), R(1, 30)));
    EXPECT_TRUE(integrality_check(bundled("Q"), R(-1, 12)));
    EXPECT_FALSE(integrality_check(bundled("Q"), R(0)));
    // zeta = 1/30 + k/2 keeps chi_h integral
    for (long k = -5; k <= 5; ++k) EXPECT_TRUE(integrality_check(bundled("Q_sqrt5"), R(1, 30) + R(k, 2)));
    EXPECT_FALSE(integrality_check(bundled("Q_sqrt5"), R(1, 30) + R(1, 4)));
}

TEST(Parse, ErrorsCarryLineAndField) {
    std::string msg = expect_data_error(
        "name: X\n"
        "degree: 1\n"
        "xi_entries:\n"
        "  - roots: [i, -i]\n"
        "    ideal_classes:\n"
        "      - cokernel_size: two\n"
        "        torsion_units: 4\n");
    EXPECT_NE(msg.find("t.yaml:6:"), std::string::npos) << msg;
    EXPECT_NE(msg.find("xi_entries[0].ideal_classes[0].cokernel_size"), std::string::npos) << msg;

    msg = expect_data_error("name: X\ndegree: 1\nxi_entries: []\nzeta: 1\n");
    EXPECT_NE(msg.find("t.yaml:4:"), std::string::npos) << msg;
    EXPECT_NE(msg.find("unknown field"), std::string::npos) << msg;

    msg = expect_data_error("name: X\nxi_entries: []\n");
    EXPECT_NE(msg.find("'degree'"), std::string::npos) << msg;

    msg = expect_data_error("name: X\ndegree: 1\nxi_entries:\n  - roots: [i]\n    ideal_classes:\n      - {cokernel_size: 1, torsion_units: 1}\n");
    EXPECT_NE(msg.find("t.yaml:6:"), std::string::npos) << msg;
    EXPECT_NE(msg.find("torsion_units"), std::string::npos) << msg;

    msg = expect_data_error("name: [unclosed\n");
    EXPECT_NE(msg.find("t.yaml:"), std::string::npos) << msg;

    msg = expect_data_error("name: X\ndegree: 1\nxi_entries: []\nchi_h: 1/0\n");
    EXPECT_NE(msg.find("t.yaml:4:"), std::string::npos) << msg;
}

TEST(Resolve, MissingFieldIsDataError) { EXPECT_THROW(resolve_field_data("no_such_field"), DataError); }
