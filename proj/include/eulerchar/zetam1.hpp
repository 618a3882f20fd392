#pragma once

/**
 * @file zetam1.hpp
 * @brief zeta_K(-1) from chi_h(SL2(O_K)) for totally real K, and back.
 *
 *   chi_h(SL2(O_K)) = 2 zeta_K(-1) + contribution,
 *   contribution    = 1/2 * sum over roots xi with [K(xi):K] = 2
 *                     of sum over ideal classes I of
 *                     #(O_K^x / N(R_I^x)) / #(R_I^x)_tors.
 *
 * Field data is declarative YAML (see data/fields/); unit-group facts are
 * inputs, not computed here.
 */

#include "exactnum.hpp"

#include <yaml-cpp/yaml.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#ifndef EULERCHAR_DEFAULT_DATA_DIR
#define EULERCHAR_DEFAULT_DATA_DIR "data/fields"
#endif

namespace ec {

struct IdealClassData {
    Int cokernel_size;   // #O_K^x / N(R_I^x)
    Int torsion_units;   // #(R_I^x)_tors
};

/// Roots sharing the same unit data; both xi and xi^-1 are listed.
struct XiEntry {
    std::vector<std::string> roots;
    std::vector<IdealClassData> ideal_classes;
};

struct FieldData {
    std::string name;
    int degree = 1;
    std::vector<XiEntry> xi_entries;
    std::optional<Rational> chi_h;
    std::optional<Rational> zeta_minus_one;
};

namespace detail {

class YamlReader {
    std::string source_;

public:
    explicit YamlReader(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const YAML::Node& at, const std::string& field, const std::string& msg) const {
        std::ostringstream os;
        os << source_ << ":" << (at.Mark().line >= 0 ? at.Mark().line + 1 : 0) << ": field '" << field << "': " << msg;
        throw DataError(os.str());
    }

    YAML::Node need(const YAML::Node& parent, const char* key, const std::string& path) const {
        YAML::Node n = parent[key];
        if (!n) fail(parent, path.empty() ? key : path + "." + key, "missing");
        return n;
    }

    std::string scalar(const YAML::Node& n, const std::string& field) const {
        if (!n.IsScalar()) fail(n, field, "expected a scalar");
        return n.Scalar();
    }

    Int integer(const YAML::Node& n, const std::string& field) const {
        std::string s = scalar(n, field);
        Int v;
        if (v.set_str(s, 10) != 0) fail(n, field, "expected an integer, got '" + s + "'");
        return v;
    }

    Rational rational(const YAML::Node& n, const std::string& field) const {
        std::string s = scalar(n, field);
        try {
            return Rational::parse(s);
        } catch (const std::exception&) {
            fail(n, field, "expected a rational p/q, got '" + s + "'");
        }
    }
};

}  // namespace detail

/// Parse and validate field data; errors carry the line and field.
inline FieldData parse_field_data(const std::string& text, const std::string& source = "<field data>") {
    detail::YamlReader rd(source);
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        std::ostringstream os;
        os << source << ":" << e.mark.line + 1 << ": parse error: " << e.msg;
        throw DataError(os.str());
    }
    if (!root.IsMap()) {
        std::ostringstream os;
        os << source << ":1: field '<root>': expected a mapping";
        throw DataError(os.str());
    }
    for (auto it = root.begin(); it != root.end(); ++it) {
        std::string k = it->first.Scalar();
        if (k != "name" && k != "degree" && k != "xi_entries" && k != "chi_h" && k != "zeta_minus_one")
            rd.fail(it->first, k, "unknown field");
    }

    FieldData fd;
    fd.name = rd.scalar(rd.need(root, "name", ""), "name");
    YAML::Node deg = rd.need(root, "degree", "");
    Int d = rd.integer(deg, "degree");
    if (d < 1 || d > 1000) rd.fail(deg, "degree", "must be a positive integer");
    fd.degree = static_cast<int>(d.get_si());

    YAML::Node xs = rd.need(root, "xi_entries", "");
    if (!xs.IsSequence()) rd.fail(xs, "xi_entries", "expected a list");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::string p = "xi_entries[" + std::to_string(i) + "]";
        YAML::Node e = xs[i];
        if (!e.IsMap()) rd.fail(e, p, "expected a mapping");
        XiEntry xe;
        YAML::Node roots = rd.need(e, "roots", p);
        if (!roots.IsSequence() || roots.size() == 0) rd.fail(roots, p + ".roots", "expected a non-empty list");
        for (std::size_t r = 0; r < roots.size(); ++r)
            xe.roots.push_back(rd.scalar(roots[r], p + ".roots[" + std::to_string(r) + "]"));
        YAML::Node ics = rd.need(e, "ideal_classes", p);
        if (!ics.IsSequence() || ics.size() == 0) rd.fail(ics, p + ".ideal_classes", "expected a non-empty list");
        for (std::size_t c = 0; c < ics.size(); ++c) {
            std::string q = p + ".ideal_classes[" + std::to_string(c) + "]";
            YAML::Node ic = ics[c];
            if (!ic.IsMap()) rd.fail(ic, q, "expected a mapping");
            YAML::Node cs = rd.need(ic, "cokernel_size", q);
            YAML::Node tu = rd.need(ic, "torsion_units", q);
            IdealClassData icd{rd.integer(cs, q + ".cokernel_size"), rd.integer(tu, q + ".torsion_units")};
            if (icd.cokernel_size < 1) rd.fail(cs, q + ".cokernel_size", "must be >= 1");
            // -1 is always a torsion unit
            if (icd.torsion_units < 2) rd.fail(tu, q + ".torsion_units", "must be >= 2");
            xe.ideal_classes.push_back(icd);
        }
        fd.xi_entries.push_back(std::move(xe));
    }
    if (YAML::Node n = root["chi_h"]) fd.chi_h = rd.rational(n, "chi_h");
    if (YAML::Node n = root["zeta_minus_one"]) fd.zeta_minus_one = rd.rational(n, "zeta_minus_one");
    return fd;
}

inline std::string data_dir() {
    if (const char* env = std::getenv("EULERCHAR_DATA_DIR"); env && *env) return env;
    return EULERCHAR_DEFAULT_DATA_DIR;
}

/// A path to a file, or a bundled field name looked up in data_dir().
inline std::filesystem::path resolve_field_data(const std::string& name_or_path) {
    namespace fs = std::filesystem;
    if (fs::is_regular_file(name_or_path)) return name_or_path;
    fs::path p = fs::path(data_dir()) / (name_or_path + ".yaml");
    if (fs::is_regular_file(p)) return p;
    throw DataError("no field data '" + name_or_path + "' (looked in " + data_dir() + ")");
}

inline FieldData load_field_data(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open field data " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_field_data(ss.str(), path.string());
}

/// 1/2 * sum over listed roots of sum over ideal classes of cokernel/torsion.
inline Rational torsion_contribution(const FieldData& fd) {
    Rational s = 0;
    for (const auto& e : fd.xi_entries) {
        Rational per_root = 0;
        for (const auto& ic : e.ideal_classes) per_root += Rational(ic.cokernel_size, ic.torsion_units);
        s += Rational(static_cast<long>(e.roots.size())) * per_root;
    }
    return s / Rational(2);
}

struct Given {
    std::optional<Rational> chi_h;
    std::optional<Rational> zeta;
};

/// Supply exactly one of chi_h, zeta_K(-1); returns the other.
inline Rational solve_identity(const FieldData& fd, const Given& g) {
    if (g.chi_h.has_value() == g.zeta.has_value())
        throw UsageError("supply exactly one of chi_h and zeta");
    Rational c = torsion_contribution(fd);
    if (g.chi_h) return (*g.chi_h - c) / Rational(2);
    return Rational(2) * *g.zeta + c;
}

/// chi_h implied by zeta must be an integer.
inline bool integrality_check(const FieldData& fd, const Rational& zeta) {
    return solve_identity(fd, Given{std::nullopt, zeta}).is_integer();
}

}  // namespace ec
