#pragma once

// System files and JSON reports.
//
// A system file is plain text with one directive per line:
//
//   # comment
//   vars x,y
//   gen x
//   gen y - x^2
//   mode preordering          (optional; default quadratic-module)
//   z 1,2                     (optional default directions for `check`)
//   order deglex:x,y          (optional default order for `term-order`)
//   expect Stable             (optional expected status, used by `examples`)
//
// Exact numbers are written to JSON as strings ("3/2", "-7"); small
// structural integers (z entries, exponents, member indices) as numbers.

#include "qmstab/feasibility.hpp"
#include "qmstab/grading.hpp"
#include "qmstab/stability.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qmstab {

inline constexpr int report_schema_version = 1;

struct SystemFile {
    std::vector<std::string> variables;
    std::vector<std::string> generators;
    bool preordering = false;
    std::vector<std::string> zs;
    std::optional<std::string> order;
    std::optional<std::string> expect;
};

namespace detail {

inline std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_commas(std::string_view s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in{std::string(s)};
    while (std::getline(in, item, ',')) out.push_back(trim(item));
    return out;
}

}  // namespace detail

inline SystemFile parse_system_file(std::string_view text) {
    SystemFile f;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) { throw DomainError("line " + std::to_string(lineno) + ": " + msg); };
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = detail::trim(line);
        if (t.empty() || t.front() == '#') continue;
        auto sp = t.find_first_of(" \t");
        std::string key = t.substr(0, sp);
        std::string rest = sp == std::string::npos ? std::string{} : detail::trim(std::string_view(t).substr(sp));
        if (rest.empty()) fail("directive '" + key + "' needs an argument");
        if (key == "vars") {
            if (!f.variables.empty()) fail("duplicate 'vars' directive");
            f.variables = detail::split_commas(rest);
        } else if (key == "gen") {
            f.generators.push_back(rest);
        } else if (key == "mode") {
            if (rest == "preordering")
                f.preordering = true;
            else if (rest == "quadratic-module")
                f.preordering = false;
            else
                fail("unknown mode '" + rest + "'");
        } else if (key == "z") {
            f.zs.push_back(rest);
        } else if (key == "order") {
            f.order = rest;
        } else if (key == "expect") {
            f.expect = rest;
        } else {
            fail("unknown directive '" + key + "'");
        }
    }
    if (f.variables.empty()) throw DomainError("system file has no 'vars' directive");
    if (f.generators.empty()) throw DomainError("system file has no 'gen' directive");
    return f;
}

inline SystemFile read_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_system_file(buf.str());
}

/// The generator system a file describes, closed under products in
/// preordering mode (or when force_preordering is set).
inline GeneratorSystem build_system(const SystemFile& f, bool force_preordering = false) {
    VariableContext ctx(f.variables);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < f.generators.size(); ++i) {
        try {
            gens.push_back(parse_polynomial(f.generators[i], ctx));
        } catch (const Error& e) {
            throw DomainError("generator " + std::to_string(i + 1) + " ('" + f.generators[i] + "'): " + e.what());
        }
    }
    GeneratorSystem sys(std::move(ctx), std::move(gens));
    return (f.preordering || force_preordering) ? sys.preordering_closure() : sys;
}

// ---------------------------------------------------------------------------
// JSON

using json = nlohmann::ordered_json;

namespace detail {

inline json rationals_to_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
}

inline std::vector<Rational> rationals_from_json(const json& a) {
    std::vector<Rational> v;
    for (const auto& x : a) v.push_back(parse_rational(x.get<std::string>()));
    return v;
}

inline json exponent_to_json(const ExponentVector& e) { return json(e.entries()); }

inline ExponentVector exponent_from_json(const json& a) {
    return ExponentVector(a.get<std::vector<ExponentVector::value_type>>());
}

inline json bigints_to_json(const std::vector<BigInt>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

inline std::vector<BigInt> bigints_from_json(const json& a) {
    std::vector<BigInt> v;
    for (const auto& x : a) {
        auto s = x.get<std::string>();
        auto q = parse_rational(s);
        if (!is_integer(q)) throw DomainError("expected an integer, got '" + s + "'");
        v.push_back(numerator(q));
    }
    return v;
}

inline Status status_from_string(const std::string& s) {
    if (s == "Stable") return Status::Stable;
    if (s == "NotTotallyStable") return Status::NotTotallyStable;
    if (s == "Unknown") return Status::Unknown;
    throw DomainError("unknown status '" + s + "'");
}

inline std::string to_string(Route r) {
    switch (r) {
        case Route::SingleGrading: return "single-grading";
        case Route::CombinedGradings: return "combined-gradings";
        case Route::TermOrderRule: return "term-order";
    }
    return "?";
}

inline Route route_from_string(const std::string& s) {
    if (s == "single-grading") return Route::SingleGrading;
    if (s == "combined-gradings") return Route::CombinedGradings;
    if (s == "term-order") return Route::TermOrderRule;
    throw DomainError("unknown route '" + s + "'");
}

}  // namespace detail

inline json to_json(const StabilityVerdict& v, const VariableContext& ctx) {
    json j;
    j["status"] = to_string(v.status);
    j["route"] = detail::to_string(v.route);
    j["chain"] = v.chain;
    j["consequences"] = {{"closed", v.consequences.closed}, {"fails_smp", v.consequences.fails_smp}};
    json dirs = json::array();
    for (const auto& d : v.directions) {
        json dj;
        dj["z"] = d.z.entries();
        dj["status"] = to_string(d.status);
        json groups = json::array();
        for (const auto& g : d.groups) {
            json gj;
            gj["residue"] = g.residue ? json(*g.residue) : json(nullptr);
            gj["members"] = g.members;
            gj["point"] = detail::rationals_to_json(g.witness.point);
            gj["values"] = detail::rationals_to_json(g.witness.values);
            groups.push_back(std::move(gj));
        }
        dj["groups"] = std::move(groups);
        dj["failed_classes"] = d.failed_classes;
        dirs.push_back(std::move(dj));
    }
    j["directions"] = std::move(dirs);
    j["combined"] = v.combined;
    j["multipliers"] = v.multipliers ? detail::bigints_to_json(*v.multipliers) : json(nullptr);
    j["obstruction"] = v.obstruction ? detail::exponent_to_json(*v.obstruction) : json(nullptr);
    if (v.term_order) {
        json tj;
        tj["order"] = to_string(v.term_order->order, ctx);
        json classes = json::array();
        for (const auto& c : v.term_order->classes) {
            json cj;
            cj["residue"] = c.residue;
            cj["members"] = c.members;
            json exps = json::array();
            for (const auto& e : c.leading_exponents) exps.push_back(detail::exponent_to_json(e));
            cj["leading_exponents"] = std::move(exps);
            cj["leading_coefficients"] = detail::rationals_to_json(c.leading_coefficients);
            classes.push_back(std::move(cj));
        }
        tj["classes"] = std::move(classes);
        tj["violating_class"] = v.term_order->violating_class ? json(*v.term_order->violating_class) : json(nullptr);
        j["term_order"] = std::move(tj);
    } else {
        j["term_order"] = nullptr;
    }
    j["note"] = v.note;
    return j;
}

/// Inverse of to_json; the context resolves variable names in term orders.
inline StabilityVerdict verdict_from_json(const json& j, const VariableContext& ctx) {
    StabilityVerdict v;
    v.status = detail::status_from_string(j.at("status").get<std::string>());
    v.route = detail::route_from_string(j.at("route").get<std::string>());
    v.chain = j.at("chain").get<std::vector<std::string>>();
    v.consequences.closed = j.at("consequences").at("closed").get<bool>();
    v.consequences.fails_smp = j.at("consequences").at("fails_smp").get<bool>();
    for (const auto& dj : j.at("directions")) {
        DirectionCertificate d;
        d.z = ZVector(dj.at("z").get<std::vector<std::int64_t>>());
        d.status = detail::status_from_string(dj.at("status").get<std::string>());
        for (const auto& gj : dj.at("groups")) {
            WitnessGroup g;
            if (!gj.at("residue").is_null()) g.residue = gj.at("residue").get<Residue>();
            g.members = gj.at("members").get<std::vector<std::size_t>>();
            g.witness.point = detail::rationals_from_json(gj.at("point"));
            g.witness.values = detail::rationals_from_json(gj.at("values"));
            d.groups.push_back(std::move(g));
        }
        d.failed_classes = dj.at("failed_classes").get<std::vector<Residue>>();
        v.directions.push_back(std::move(d));
    }
    v.combined = j.at("combined").get<std::vector<std::size_t>>();
    if (!j.at("multipliers").is_null()) v.multipliers = detail::bigints_from_json(j.at("multipliers"));
    if (!j.at("obstruction").is_null()) v.obstruction = detail::exponent_from_json(j.at("obstruction"));
    if (const auto& tj = j.at("term_order"); !tj.is_null()) {
        TermOrderAnalysis a;
        a.order = parse_term_order(tj.at("order").get<std::string>(), ctx);
        for (const auto& cj : tj.at("classes")) {
            TermClass c;
            c.residue = cj.at("residue").get<Residue>();
            c.members = cj.at("members").get<std::vector<std::size_t>>();
            for (const auto& e : cj.at("leading_exponents")) c.leading_exponents.push_back(detail::exponent_from_json(e));
            c.leading_coefficients = detail::rationals_from_json(cj.at("leading_coefficients"));
            a.classes.push_back(std::move(c));
        }
        if (!tj.at("violating_class").is_null()) a.violating_class = tj.at("violating_class").get<std::size_t>();
        v.term_order = std::move(a);
    }
    v.note = j.value("note", "");
    return v;
}

inline json to_json(const FeasibilityOutcome& o) {
    if (const auto* m = std::get_if<Multipliers>(&o)) return {{"kind", "Multipliers"}, {"r", detail::bigints_to_json(m->r)}};
    return {{"kind", "FarkasWitness"}, {"delta", detail::exponent_to_json(std::get<FarkasWitness>(o).delta)}};
}

inline json to_json(const CoveringResult& c) {
    json j;
    switch (c.status) {
        case CoveringResult::Status::Covered: j["status"] = "Covered"; break;
        case CoveringResult::Status::NotCovered: j["status"] = "NotCovered"; break;
        case CoveringResult::Status::Unknown: j["status"] = "Unknown"; break;
    }
    if (c.certificate)
        j["certificate"] = {{"r", c.certificate->r}, {"t", c.certificate->t}};
    else
        j["certificate"] = nullptr;
    j["reason"] = c.reason;
    return j;
}

}  // namespace qmstab
