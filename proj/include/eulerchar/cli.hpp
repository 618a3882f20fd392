#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end: torsion, chi-h, gamma1, zeta.
 *
 * Exit codes: 0 ok, 2 usage, 3 hypothesis violation, 4 data-file error.
 * Rationals are printed as "p/q" text, never as decimals.
 */

#include "eulerchar.hpp"
#include "zetam1.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <regex>

namespace ec::cli {

using json = nlohmann::ordered_json;

enum Exit { Ok = 0, Usage = 2, Hypothesis = 3, Data = 4, Internal = 1 };

struct Record {
    std::string command;
    std::vector<std::pair<std::string, std::string>> query;
    std::string result;
    std::vector<std::pair<std::string, std::string>> details;
    std::vector<std::string> provenance;

    json to_json() const {
        json j;
        j["command"] = command;
        j["query"] = json::object();
        for (const auto& [k, v] : query) j["query"][k] = v;
        j["result"] = result;
        if (!details.empty()) {
            j["details"] = json::object();
            for (const auto& [k, v] : details) j["details"][k] = v;
        }
        j["provenance"] = provenance;
        return j;
    }

    void print_text(std::ostream& out) const {
        std::vector<std::pair<std::string, std::string>> rows{{"command", command}};
        rows.insert(rows.end(), query.begin(), query.end());
        rows.emplace_back("result", result);
        rows.insert(rows.end(), details.begin(), details.end());
        for (const auto& p : provenance) rows.emplace_back("provenance", p);
        std::size_t w = 0;
        for (const auto& r : rows) w = std::max(w, r.first.size());
        for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(w) + 2) << k << v << '\n';
    }
};

inline void emit(const Record& r, const std::string& format, std::ostream& out) {
    if (format == "json") out << r.to_json().dump(2) << '\n';
    else r.print_text(out);
}

// ---------------------------------------------------------------------------
// torsion
// ---------------------------------------------------------------------------

inline json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_si());
        rows.push_back(row);
    }
    return rows;
}

inline void print_catalog(int m, const std::string& format, std::ostream& out) {
    const auto& cat = torsion_catalog(m);
    std::string group = "GL" + std::to_string(m) + "(Z)";
    if (format == "json") {
        json j;
        j["command"] = "torsion";
        j["group"] = group;
        j["count"] = cat.size();
        j["classes"] = json::array();
        for (const auto& c : cat) {
            json r;
            r["label"] = c.label;
            r["representative"] = matrix_json(c.rep);
            r["order"] = c.order;
            r["centralizer"] = c.centralizer.str();
            r["chi"] = c.chi_c.str();
            if (c.chi_printed) r["chi_printed"] = c.chi_printed->str();
            j["classes"].push_back(r);
        }
        out << j.dump(2) << '\n';
        return;
    }
    std::vector<std::vector<std::string>> rows{{"label", "representative", "order", "centralizer", "chi", "chi_printed"}};
    for (const auto& c : cat)
        rows.push_back({"(" + c.label + ")", to_string(c.rep), std::to_string(c.order), c.centralizer.str(), c.chi_c.str(),
                        c.chi_printed ? c.chi_printed->str() : "-"});
    std::vector<std::size_t> w(rows[0].size(), 0);
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    out << "# torsion classes of " << group << " up to conjugacy: " << cat.size() << '\n';
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::string cell = r[i];
            if (i + 1 < r.size()) cell.resize(w[i] + 2, ' ');
            line += cell;
        }
        out << line << '\n';
    }
}

// ---------------------------------------------------------------------------
// parsing helpers
// ---------------------------------------------------------------------------

struct GroupChoice {
    RingKind ring;
    int m;
};

/// "gl<m>z", "gl<m>gauss", "gl<m>eisenstein".
inline GroupChoice parse_group(const std::string& g) {
    static const std::regex re(R"(^gl(\d+)(z|gauss|eisenstein)$)");
    std::smatch mt;
    if (!std::regex_match(g, mt, re)) throw UsageError("unknown group '" + g + "' (expected e.g. gl2z, gl2gauss, gl2eisenstein)");
    int m = std::stoi(mt[1]);
    if (m < 1 || m > 64) throw UsageError("group dimension out of range");
    RingKind r = mt[2] == "z" ? RingKind::Z : mt[2] == "gauss" ? RingKind::Gauss : RingKind::Eisenstein;
    return {r, m};
}

/// "a+bi" (Z[i]) or "a+b*w" (Z[xi3], w = xi3); ring inferred from the unit symbol.
inline std::pair<RingKind, CyclotomicInt> parse_ideal(std::string s, const std::string& ring_hint) {
    s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
    static const std::regex re(R"(^([+-]?\d+)?(?:([+-]?)(\d*)\*?([iw]))?$)");
    std::smatch mt;
    if (s.empty() || !std::regex_match(s, mt, re)) throw UsageError("cannot parse ideal generator '" + s + "'");
    Int a = 0, b = 0;
    bool has_im = mt[4].matched;
    if (has_im && mt[1].matched && mt[2].str().empty() && mt[3].str().empty()) {
        b = Int(mt[1].str());  // "3i", "-2w"
    } else {
        if (mt[1].matched) a = Int(mt[1].str());
        if (has_im) {
            b = mt[3].str().empty() ? Int(1) : Int(mt[3].str());
            if (mt[2].str() == "-") b = -b;
        }
    }
    RingKind r;
    if (has_im) r = mt[4].str() == "i" ? RingKind::Gauss : RingKind::Eisenstein;
    else if (ring_hint == "gauss") r = RingKind::Gauss;
    else if (ring_hint == "eisenstein") r = RingKind::Eisenstein;
    else throw UsageError("integer ideal generator needs --ring gauss|eisenstein");
    if (!ring_hint.empty() && ((ring_hint == "gauss") != (r == RingKind::Gauss)))
        throw UsageError("--ring " + ring_hint + " conflicts with generator '" + s + "'");
    return {r, quad(quad_ring_of(r), a, b)};
}

inline std::string ring_group_name(RingKind r, int m) {
    return "GL_" + std::to_string(m) + "(" + ring_label(r) + ")";
}

// ---------------------------------------------------------------------------
// entry point
// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Homological Euler characteristics of arithmetic groups via Brown's formula"};
    app.name("eulerchar");
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* sc) {
        sc->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* tor = app.add_subcommand("torsion", "list torsion conjugacy classes with centralizers");
    std::string tor_group;
    tor->add_option("--group", tor_group, "gl1z | gl2z | gl3z")->required()->check(CLI::IsMember({"gl1z", "gl2z", "gl3z"}));
    add_format(tor);

    auto* chi = app.add_subcommand("chi-h", "chi_h(GL_m, S^n V (x) det^e)");
    std::string chi_group;
    int sym = 0;
    bool det_flag = false;
    chi->add_option("--group", chi_group, "gl2z | gl3z | gl4z | gl2gauss | gl2eisenstein (any gl<m>z|gauss|eisenstein)")->required();
    chi->add_option("--sym", sym, "symmetric power n")->check(CLI::NonNegativeNumber);
    chi->add_flag("--det", det_flag, "twist by det");
    add_format(chi);

    auto* g1 = app.add_subcommand("gamma1", "chi_h(Gamma1(m, level), S^n V (x) det^e)");
    int g1m = 0;
    std::string level, ideal, ring_hint;
    g1->add_option("--m", g1m, "dimension m")->required();
    auto* lv = g1->add_option("--level", level, "level N over Z (coprime to 6)");
    auto* id = g1->add_option("--ideal", ideal, "level ideal generator a+bi or a+b*w (w = xi3)");
    lv->excludes(id);
    g1->add_option("--ring", ring_hint, "gauss | eisenstein, for integer generators")->check(CLI::IsMember({"gauss", "eisenstein"}));
    g1->add_option("--sym", sym, "symmetric power n")->check(CLI::NonNegativeNumber);
    g1->add_flag("--det", det_flag, "twist by det");
    add_format(g1);

    auto* zt = app.add_subcommand("zeta", "solve chi_h(SL2(O_K)) = 2 zeta_K(-1) + contribution");
    std::string field, given;
    zt->add_option("--field", field, "bundled field name (Q, Q_sqrt5) or path to a field-data file")->required();
    zt->add_option("--given", given, "chi_h=<p/q> or zeta=<p/q>")->required();
    add_format(zt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (tor->parsed()) {
            print_catalog(tor_group[2] - '0', format, out);
            return Ok;
        }
        if (chi->parsed()) {
            GroupChoice gc = parse_group(chi_group);
            RepSpec rep(gc.m, sym, det_flag ? 1 : 0);
            Record r;
            r.command = "chi-h";
            r.query = {{"group", ring_group_name(gc.ring, gc.m)}, {"rep", rep.str()}};
            if (vanishing_bound(field_of(gc.ring), GroupKind::GL, gc.m)) {
                r.result = "0";
                r.provenance = {std::string("vanishing bound: no torsion class of GL_") + std::to_string(gc.m) + "(" +
                                ring_label(gc.ring) + ") has a centralizer with nonzero Euler characteristic"};
            } else {
                r.result = chi_h_glm(gc.ring, gc.m, rep).str();
                r.provenance = {"Brown formula", "block families weighted by |resultant| * chi(centralizer)",
                                "symmetric-power traces of inverse torsion elements"};
            }
            emit(r, format, out);
            return Ok;
        }
        if (g1->parsed()) {
            if (level.empty() == ideal.empty()) throw UsageError("give exactly one of --level and --ideal");
            RepSpec rep(g1m, sym, det_flag ? 1 : 0);
            Record r;
            r.command = "gamma1";
            if (!level.empty()) {
                Int n;
                if (n.set_str(level, 10) != 0) throw UsageError("level must be an integer");
                r.query = {{"group", "Gamma1(" + std::to_string(g1m) + ", " + n.get_str() + ") in GL_" + std::to_string(g1m) + "(Z)"},
                           {"rep", rep.str()}};
                r.result = chi_h_gamma1_z(g1m, n, rep).str();
                r.details = {{"phi(N)", phi(n).get_str()}, {"phi2(N)", phi2(n).get_str()}};
                r.provenance = {"Brown formula restricted to Gamma1 (torsion fixes an eigenvector with eigenvalue 1)",
                                "phi(N) * sum over [A1, 1] + phi2(N) * sum over [A2, I2]"};
            } else {
                auto [ring, gen] = parse_ideal(ideal, ring_hint);
                std::string shown = ideal;
                std::erase(shown, ' ');
                r.query = {{"group", "Gamma1(" + std::to_string(g1m) + ", (" + shown + ")) in " + ring_group_name(ring, g1m)},
                           {"rep", rep.str()}};
                r.result = chi_h_gamma1_ring(ring, g1m, gen, rep).str();
                r.details = {{"phi_ring", phi_ring(gen, quad_ring_of(ring)).get_str()}};
                r.provenance = {"Brown formula restricted to Gamma1 (torsion fixes an eigenvector with eigenvalue 1)",
                                "phi_ring(a) * sum over [A0, 1]"};
            }
            emit(r, format, out);
            return Ok;
        }
        if (zt->parsed()) {
            auto eq = given.find('=');
            if (eq == std::string::npos) throw UsageError("--given expects chi_h=<p/q> or zeta=<p/q>");
            std::string key = given.substr(0, eq), val = given.substr(eq + 1);
            Rational v;
            try {
                v = Rational::parse(val);
            } catch (const std::exception&) {
                throw UsageError("--given value '" + val + "' is not a rational");
            }
            Given g;
            if (key == "chi_h") g.chi_h = v;
            else if (key == "zeta") g.zeta = v;
            else throw UsageError("--given key must be chi_h or zeta");
            auto path = resolve_field_data(field);
            FieldData fd = load_field_data(path);
            Rational ans = solve_identity(fd, g);
            Rational zeta = g.zeta ? *g.zeta : ans;
            Record r;
            r.command = "zeta";
            r.query = {{"field", fd.name}, {"given", key + "=" + v.str()}};
            r.result = (g.chi_h ? "zeta=" : "chi_h=") + ans.str();
            r.details = {{"contribution", torsion_contribution(fd).str()},
                         {"chi_h_integral", integrality_check(fd, zeta) ? "true" : "false"}};
            r.provenance = {"chi_h(SL2(O_K)) = 2 zeta_K(-1) + 1/2 sum_xi sum_I #coker/#torsion", "field data: " + path.string()};
            emit(r, format, out);
            return Ok;
        }
    } catch (const HypothesisError& e) {
        err << "error: hypothesis violated: " << e.what() << '\n';
        return Hypothesis;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return Data;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return Internal;
    }
    return Usage;
}

}  // namespace ec::cli
