#include <eulerchar/cli.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "eulerchar");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = ec::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    CliRun r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return nlohmann::json::parse(r.out);
}

std::size_t table_rows(const std::string& text) {
    std::size_t n = 0;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty() && line[0] == '(') ++n;
    return n;
}

}  // namespace

TEST(Torsion, RowCounts) {
    EXPECT_EQ(table_rows(run({"torsion", "--group", "gl2z"}).out), 7u);
    EXPECT_EQ(table_rows(run({"torsion", "--group", "gl1z"}).out), 2u);
    auto j = run_json({"torsion", "--group", "gl3z"});
    EXPECT_EQ(j["classes"].size(), 16u);
    EXPECT_EQ(j["count"], 16);
}

TEST(Torsion, JsonCarriesBothChiValuesForC2xC2) {
    auto j = run_json({"torsion", "--group", "gl2z"});
    for (const auto& c : j["classes"])
        if (c["label"] == "c1") {
            EXPECT_EQ(c["chi"], "1/4");
            EXPECT_EQ(c["chi_printed"], "-1/4");
        }
}

TEST(Torsion, UnknownGroupIsUsageError) { EXPECT_EQ(run({"torsion", "--group", "gl4z"}).code, 2); }

TEST(ChiH, KnownValues) {
    EXPECT_EQ(run_json({"chi-h", "--group", "gl2z", "--sym", "10"})["result"], "-1");
    EXPECT_EQ(run_json({"chi-h", "--group", "gl2gauss", "--sym", "4"})["result"], "1");
    EXPECT_EQ(run_json({"chi-h", "--group", "gl2z", "--sym", "0"})["result"], "1");
    EXPECT_EQ(run_json({"chi-h", "--group", "gl2z", "--sym", "2", "--det"})["result"], "-1");
    EXPECT_EQ(run_json({"chi-h", "--group", "gl4z", "--sym", "12"})["result"], "0");
}

TEST(ChiH, VanishingBoundIsNotAnError) {
    CliRun r = run({"chi-h", "--group", "gl11z"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("vanishing bound"), std::string::npos);
}

TEST(ChiH, BadGroupIsUsageError) {
    EXPECT_EQ(run({"chi-h", "--group", "sl2z"}).code, 2);
    EXPECT_EQ(run({"chi-h", "--group", "gl2z", "--sym", "-1"}).code, 2);
    EXPECT_EQ(run({"chi-h"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(Gamma1, KnownValues) {
    EXPECT_EQ(run_json({"gamma1", "--m", "3", "--level", "5"})["result"], "0");
    EXPECT_EQ(run_json({"gamma1", "--m", "2", "--level", "5", "--sym", "1"})["result"], "-2");
    EXPECT_EQ(run_json({"gamma1", "--m", "2", "--ideal", "2+i"})["result"], "2");
    EXPECT_EQ(run_json({"gamma1", "--m", "2", "--ideal", "3+w"})["result"], "2");
    EXPECT_EQ(run_json({"gamma1", "--m", "2", "--ideal", "3", "--ring", "gauss"})["result"], "4");
    EXPECT_EQ(run_json({"gamma1", "--m", "2", "--ideal", "-1+2i"})["result"], "2");
}

TEST(Gamma1, HypothesisViolations) {
    CliRun r = run({"gamma1", "--m", "3", "--level", "6"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("level must be coprime to 6"), std::string::npos);
    EXPECT_EQ(run({"gamma1", "--m", "2", "--ideal", "1+i"}).code, 3);
    EXPECT_EQ(run({"gamma1", "--m", "2", "--ideal", "2+w"}).code, 3);
}

TEST(Gamma1, UsageErrors) {
    EXPECT_EQ(run({"gamma1", "--m", "2"}).code, 2);
    EXPECT_EQ(run({"gamma1", "--m", "2", "--level", "5", "--ideal", "2+i"}).code, 2);
    EXPECT_EQ(run({"gamma1", "--m", "2", "--ideal", "3"}).code, 2);
    EXPECT_EQ(run({"gamma1", "--m", "2", "--ideal", "2+i", "--ring", "eisenstein"}).code, 2);
    EXPECT_EQ(run({"gamma1", "--m", "2", "--ideal", "2+q"}).code, 2);
    EXPECT_EQ(run({"gamma1", "--m", "5", "--level", "7"}).code, 2);
}

TEST(IdealParser, Forms) {
    using ec::cli::parse_ideal;
    auto g = [](long a, long b) { return ec::quad(ec::QuadRing::Z_i, a, b); };
    auto w = [](long a, long b) { return ec::quad(ec::QuadRing::Z_xi3, a, b); };
    EXPECT_EQ(parse_ideal("2+i", "").second, g(2, 1));
    EXPECT_EQ(parse_ideal("3i", "").second, g(0, 3));
    EXPECT_EQ(parse_ideal("-i", "").second, g(0, -1));
    EXPECT_EQ(parse_ideal("1 - 4i", "").second, g(1, -4));
    EXPECT_EQ(parse_ideal("4+3*w", "").second, w(4, 3));
    EXPECT_EQ(parse_ideal("w", "").second, w(0, 1));
    EXPECT_EQ(parse_ideal("5", "eisenstein").second, w(5, 0));
    EXPECT_EQ(parse_ideal("5", "eisenstein").first, ec::RingKind::Eisenstein);
}

TEST(Zeta, BundledFields) {
    EXPECT_EQ(run_json({"zeta", "--field", "Q", "--given", "chi_h=1"})["result"], "zeta=-1/12");
    EXPECT_EQ(run_json({"zeta", "--field", "Q_sqrt5", "--given", "chi_h=4"})["result"], "zeta=1/30");
    EXPECT_EQ(run_json({"zeta", "--field", "Q_sqrt5", "--given", "zeta=1/30"})["result"], "chi_h=4");
}

TEST(Zeta, MalformedFileReportsLine) {
    auto p = std::filesystem::temp_directory_path() / "eulerchar_bad_field.yaml";
    {
        std::ofstream f(p);
        f << "name: X\ndegree: 1\nxi_entries:\n  - roots: [i]\n    ideal_classes:\n      - cokernel_size: -3\n        torsion_units: 4\n";
    }
    CliRun r = run({"zeta", "--field", p.string(), "--given", "chi_h=1"});
    EXPECT_EQ(r.code, 4);
    EXPECT_NE(r.err.find(":6:"), std::string::npos) << r.err;
    std::filesystem::remove(p);
}

TEST(Zeta, UsageErrors) {
    EXPECT_EQ(run({"zeta", "--field", "Q", "--given", "chi=1"}).code, 2);
    EXPECT_EQ(run({"zeta", "--field", "Q", "--given", "chi_h=x"}).code, 2);
    EXPECT_EQ(run({"zeta", "--field", "nowhere", "--given", "chi_h=1"}).code, 4);
}

TEST(Zeta, DataDirOverride) {
    auto dir = std::filesystem::temp_directory_path() / "eulerchar_data_dir";
    std::filesystem::create_directories(dir);
    {
        std::ofstream f(dir / "Toy.yaml");
        f << "name: Toy\ndegree: 1\nxi_entries:\n  - roots: [i, -i]\n    ideal_classes:\n      - {cokernel_size: 1, torsion_units: 2}\n";
    }
    setenv("EULERCHAR_DATA_DIR", dir.c_str(), 1);
    // contribution = 1/2 * 2 * 1/2 = 1/2, so chi_h = 2 zeta + 1/2
    EXPECT_EQ(run_json({"zeta", "--field", "Toy", "--given", "zeta=1/4"})["result"], "chi_h=1");
    unsetenv("EULERCHAR_DATA_DIR");
    std::filesystem::remove_all(dir);
}

TEST(Output, Deterministic) {
    for (auto args : std::vector<std::vector<std::string>>{{"torsion", "--group", "gl3z", "--format", "json"},
                                                           {"chi-h", "--group", "gl3z", "--sym", "7"},
                                                           {"gamma1", "--m", "4", "--level", "35", "--format", "json"},
                                                           {"zeta", "--field", "Q_sqrt5", "--given", "chi_h=4"}}) {
        CliRun a = run(args), b = run(args);
        EXPECT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Output, RationalsAreStrings) {
    auto j = run_json({"gamma1", "--m", "2", "--level", "7", "--sym", "2"});
    EXPECT_TRUE(j["result"].is_string());
    for (const auto& [k, v] : j["details"].items()) EXPECT_TRUE(v.is_string()) << k;
}
