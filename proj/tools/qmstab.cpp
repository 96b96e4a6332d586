// qmstab: command-line front end for the stability checks.
//
// Exit codes: 0 Stable / OnlyConstants / Covered / no violations,
//             2 Unknown, 3 definitive negative, 1 usage or input error.

#include "qmstab/qmstab.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifndef QMSTAB_DATA_DIR
#define QMSTAB_DATA_DIR "data/systems"
#endif

namespace {

using qmstab::json;

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_unknown = 2;
constexpr int exit_negative = 3;

struct Options {
    std::string system_path;
    std::vector<std::string> zs;
    std::string order;
    std::string target;
    std::vector<std::string> box;
    std::vector<std::string> lambdas{"1", "2", "4"};
    std::size_t grid = 3;
    std::size_t nvars = 0;
    std::int64_t bound = 16;
    qmstab::SearchConfig search;
    bool preordering = false;
    bool text = false;
    bool timing = false;
    std::string report_path;
    std::string data_dir = QMSTAB_DATA_DIR;
};

int exit_code_for(qmstab::Status s) {
    switch (s) {
        case qmstab::Status::Stable: return exit_ok;
        case qmstab::Status::Unknown: return exit_unknown;
        case qmstab::Status::NotTotallyStable: return exit_negative;
    }
    return exit_error;
}

json config_json(const Options& o) {
    return {{"seed", o.search.seed},
            {"max_scale", o.search.max_scale},
            {"samples", o.search.samples_per_scale},
            {"denom_bound", o.search.denom_bound},
            {"preordering", o.preordering},
            {"bound", o.bound}};
}

json system_json(const qmstab::GeneratorSystem& sys, const std::string& path, bool preordering) {
    json gens = json::array();
    for (const auto& g : sys.generators()) gens.push_back(qmstab::to_string(g, sys.context()));
    return {{"file", path},
            {"variables", sys.context().names()},
            {"mode", preordering ? "preordering" : "quadratic-module"},
            {"generators", std::move(gens)}};
}

std::vector<qmstab::ZVector> parse_zs(const std::vector<std::string>& texts) {
    std::vector<qmstab::ZVector> zs;
    for (const auto& t : texts) zs.push_back(qmstab::parse_zvector(t));
    return zs;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string point_text(const std::vector<qmstab::Rational>& p) {
    std::vector<std::string> parts;
    for (const auto& q : p) parts.push_back(qmstab::to_string(q));
    return "(" + join(parts, ", ") + ")";
}

void print_verdict_text(std::ostream& out, const qmstab::StabilityVerdict& v, const qmstab::GeneratorSystem& sys) {
    out << "status: " << qmstab::to_string(v.status) << '\n';
    if (!v.chain.empty()) out << "chain: " << join(v.chain, " -> ") << '\n';
    for (const auto& d : v.directions) {
        out << "direction z=(" << qmstab::to_string(d.z) << "): " << qmstab::to_string(d.status) << '\n';
        for (const auto& g : d.groups) {
            out << "  witness " << point_text(g.witness.point);
            if (g.residue) out << " for residue " << qmstab::to_string(*g.residue);
            out << '\n';
        }
        for (const auto& r : d.failed_classes) out << "  no witness for residue " << qmstab::to_string(r) << '\n';
    }
    if (v.multipliers) {
        std::vector<std::string> r;
        for (const auto& x : *v.multipliers) r.push_back(x.str());
        out << "multipliers: (" << join(r, ", ") << ")\n";
    }
    if (v.obstruction) out << "bounded monomial exponent: (" << qmstab::to_string(*v.obstruction) << ")\n";
    if (v.term_order) {
        out << "order: " << qmstab::to_string(v.term_order->order, sys.context()) << '\n';
        for (std::size_t c = 0; c < v.term_order->classes.size(); ++c) {
            const auto& cls = v.term_order->classes[c];
            out << "  class (" << qmstab::to_string(cls.residue) << "):";
            for (std::size_t k = 0; k < cls.members.size(); ++k)
                out << ' ' << (cls.members[k] == 0 ? std::string("1") : "f" + std::to_string(cls.members[k])) << '['
                    << qmstab::to_string(cls.leading_coefficients[k]) << ']';
            if (v.term_order->violating_class == c) out << "  <- sign rule violated";
            out << '\n';
        }
    }
    out << "closed: " << (v.consequences.closed ? "yes" : "no")
        << ", fails strong moment property: " << (v.consequences.fails_smp ? "yes" : "no") << '\n';
    if (!v.note.empty()) out << "note: " << v.note << '\n';
}

void emit(const Options& o, json report, std::chrono::steady_clock::time_point start, const std::string& text) {
    if (o.timing) {
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report["timing_ms"] = ms;
    }
    if (o.text)
        std::cout << text;
    else
        std::cout << report.dump(2) << '\n';
}

json report_header(const std::string& command, const Options& o) {
    json r;
    r["schema"] = qmstab::report_schema_version;
    r["command"] = command;
    r["config"] = config_json(o);
    return r;
}

int cmd_check(const Options& o) {
    const auto start = std::chrono::steady_clock::now();
    auto file = qmstab::read_system_file(o.system_path);
    auto sys = qmstab::build_system(file, o.preordering);
    auto zs = parse_zs(o.zs.empty() ? file.zs : o.zs);
    if (zs.empty()) throw qmstab::DomainError("no directions given (use --z or 'z' lines in the file)");
    auto verdict = qmstab::stability_verdict(sys, zs, o.search);
    if (!qmstab::verify_certificate(verdict, sys)) throw qmstab::InternalError("emitted verdict failed verification");

    json report = report_header("check", o);
    report["system"] = system_json(sys, o.system_path, file.preordering || o.preordering);
    report["verdict"] = qmstab::to_json(verdict, sys.context());
    std::ostringstream text;
    print_verdict_text(text, verdict, sys);
    emit(o, std::move(report), start, text.str());
    return exit_code_for(verdict.status);
}

int cmd_term_order(const Options& o) {
    const auto start = std::chrono::steady_clock::now();
    auto file = qmstab::read_system_file(o.system_path);
    auto sys = qmstab::build_system(file, o.preordering);
    std::string order_text = !o.order.empty() ? o.order : file.order.value_or("");
    if (order_text.empty()) throw qmstab::DomainError("no term order given (use --order or an 'order' line)");
    auto ord = qmstab::parse_term_order(order_text, sys.context());
    auto verdict = qmstab::term_order_total_stability(sys, ord);
    if (!qmstab::verify_certificate(verdict, sys)) throw qmstab::InternalError("emitted verdict failed verification");

    json report = report_header("term-order", o);
    report["system"] = system_json(sys, o.system_path, file.preordering || o.preordering);
    report["verdict"] = qmstab::to_json(verdict, sys.context());
    std::ostringstream text;
    print_verdict_text(text, verdict, sys);
    emit(o, std::move(report), start, text.str());
    return exit_code_for(verdict.status);
}

int cmd_bounded(const Options& o) {
    const auto start = std::chrono::steady_clock::now();
    auto zs = parse_zs(o.zs);
    if (zs.empty()) throw qmstab::DomainError("bounded needs at least one --z");
    auto outcome = qmstab::bounded_monomials(zs);
    json report = report_header("bounded", o);
    json input = json::array();
    for (const auto& z : zs) input.push_back(z.entries());
    report["zs"] = std::move(input);
    std::ostringstream text;
    int code = exit_ok;
    if (const auto* c = std::get_if<qmstab::OnlyConstants>(&outcome)) {
        report["result"] = {{"kind", "OnlyConstants"}, {"r", qmstab::detail::bigints_to_json(c->r)}};
        std::vector<std::string> r;
        for (const auto& x : c->r) r.push_back(x.str());
        text << "only constants are bounded; multipliers (" << join(r, ", ") << ")\n";
    } else {
        const auto& delta = std::get<qmstab::BoundedMonomial>(outcome).delta;
        report["result"] = {{"kind", "Witness"}, {"delta", delta.entries()}};
        text << "bounded monomial with exponent (" << qmstab::to_string(delta) << ")\n";
        code = exit_negative;
    }
    emit(o, std::move(report), start, text.str());
    return code;
}

int cmd_covering(const Options& o) {
    const auto start = std::chrono::steady_clock::now();
    auto target = qmstab::parse_zvector(o.target);
    auto zs = parse_zs(o.zs);
    if (zs.empty()) throw qmstab::DomainError("covering needs at least one --z");
    auto result = qmstab::covering_check(target, zs, o.bound);
    json report = report_header("covering", o);
    report["target"] = target.entries();
    json input = json::array();
    for (const auto& z : zs) input.push_back(z.entries());
    report["zs"] = std::move(input);
    report["result"] = qmstab::to_json(result);
    std::ostringstream text;
    text << qmstab::to_json(result)["status"].get<std::string>() << '\n';
    if (result.certificate) {
        std::vector<std::string> r, t;
        for (auto x : result.certificate->r) r.push_back(std::to_string(x));
        for (auto x : result.certificate->t) t.push_back(std::to_string(x));
        text << "r = (" << join(r, ", ") << "), t = (" << join(t, ", ") << ")\n";
    } else {
        text << result.reason << '\n';
    }
    emit(o, std::move(report), start, text.str());
    switch (result.status) {
        case qmstab::CoveringResult::Status::Covered: return exit_ok;
        case qmstab::CoveringResult::Status::NotCovered: return exit_negative;
        case qmstab::CoveringResult::Status::Unknown: return exit_unknown;
    }
    return exit_error;
}

int cmd_tentacle(const Options& o) {
    const auto start = std::chrono::steady_clock::now();
    auto file = qmstab::read_system_file(o.system_path);
    auto sys = qmstab::build_system(file, o.preordering);
    if (o.zs.size() != 1) throw qmstab::DomainError("tentacle-sample needs exactly one --z");
    qmstab::TentacleSpec spec{qmstab::parse_zvector(o.zs.front()), {}};
    for (const auto& b : o.box) {
        auto colon = b.find(':');
        if (colon == std::string::npos) throw qmstab::DomainError("box interval must look like lo:hi, got '" + b + "'");
        spec.box.emplace_back(qmstab::parse_rational(b.substr(0, colon)), qmstab::parse_rational(b.substr(colon + 1)));
    }
    std::vector<qmstab::Rational> lambdas;
    for (const auto& l : o.lambdas) lambdas.push_back(qmstab::parse_rational(l));
    auto rep = qmstab::tentacle_sample_check(sys, spec, lambdas, o.grid);

    json report = report_header("tentacle-sample", o);
    report["system"] = system_json(sys, o.system_path, file.preordering || o.preordering);
    json box = json::array();
    for (const auto& [lo, hi] : spec.box) box.push_back({qmstab::to_string(lo), qmstab::to_string(hi)});
    report["tentacle"] = {{"z", spec.z.entries()}, {"box", std::move(box)}, {"lambdas", o.lambdas}, {"grid", o.grid}};
    json viol = json::array();
    for (const auto& v : rep.violations)
        viol.push_back({{"lambda", qmstab::to_string(v.lambda)},
                        {"base_point", qmstab::detail::rationals_to_json(v.base_point)},
                        {"image", qmstab::detail::rationals_to_json(v.image)},
                        {"generator", v.generator},
                        {"value", qmstab::to_string(v.value)}});
    report["result"] = {{"points_checked", rep.points_checked}, {"violations", std::move(viol)}};
    std::ostringstream text;
    text << rep.points_checked << " points checked, " << rep.violations.size() << " violations\n";
    for (const auto& v : rep.violations)
        text << "  f" << v.generator << " = " << qmstab::to_string(v.value) << " at " << point_text(v.image)
             << " (lambda " << qmstab::to_string(v.lambda) << ")\n";
    emit(o, std::move(report), start, text.str());
    return rep.violations.empty() ? exit_ok : exit_negative;
}

int cmd_suggest(const Options& o) {
    const auto start = std::chrono::steady_clock::now();
    std::size_t n = o.nvars;
    if (!o.system_path.empty()) n = qmstab::build_system(qmstab::read_system_file(o.system_path)).nvars();
    if (n == 0) throw qmstab::DomainError("give a system file or --n");
    auto zs = qmstab::suggest_z_vectors(n, o.bound);
    json report = report_header("suggest-z", o);
    json list = json::array();
    std::ostringstream text;
    for (const auto& z : zs) {
        list.push_back(z.entries());
        text << qmstab::to_string(z) << '\n';
    }
    report["zs"] = std::move(list);
    emit(o, std::move(report), start, text.str());
    return exit_ok;
}

int cmd_verify(const Options& o) {
    auto file = qmstab::read_system_file(o.system_path);
    auto sys = qmstab::build_system(file, o.preordering);
    std::ifstream in(o.report_path);
    if (!in) throw qmstab::DomainError("cannot open '" + o.report_path + "'");
    json report = json::parse(in);
    const json& vj = report.contains("verdict") ? report.at("verdict") : report;
    auto verdict = qmstab::verdict_from_json(vj, sys.context());
    const bool ok = qmstab::verify_certificate(verdict, sys);
    if (o.text)
        std::cout << (ok ? "certificate verified\n" : "certificate REJECTED\n");
    else
        std::cout << json{{"schema", qmstab::report_schema_version}, {"command", "verify"}, {"valid", ok}}.dump(2)
                  << '\n';
    return ok ? exit_ok : exit_negative;
}

int cmd_examples(const Options& o) {
    const auto start = std::chrono::steady_clock::now();
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(o.data_dir))
        if (entry.path().extension() == ".qm") files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    json results = json::array();
    std::ostringstream text;
    std::size_t matched = 0, total = 0;
    bool definitive_mismatch = false;
    for (const auto& path : files) {
        auto file = qmstab::read_system_file(path.string());
        if (!file.expect) continue;
        ++total;
        auto sys = qmstab::build_system(file, o.preordering);
        qmstab::StabilityVerdict v;
        std::string how;
        if (file.order) {
            v = qmstab::term_order_total_stability(sys, qmstab::parse_term_order(*file.order, sys.context()));
            how = "term-order " + *file.order;
        } else {
            v = qmstab::stability_verdict(sys, parse_zs(file.zs), o.search);
            how = "check --z " + join(file.zs, " --z ");
        }
        const bool verified = qmstab::verify_certificate(v, sys);
        const std::string got = qmstab::to_string(v.status);
        const bool match = got == *file.expect && verified;
        matched += match ? 1 : 0;
        if (!match && v.status != qmstab::Status::Unknown) definitive_mismatch = true;
        results.push_back({{"name", path.stem().string()},
                           {"run", how},
                           {"expected", *file.expect},
                           {"status", got},
                           {"certificate_verified", verified},
                           {"match", match},
                           {"verdict", qmstab::to_json(v, sys.context())}});
        text << (match ? "[match]    " : "[MISMATCH] ") << path.stem().string() << ": " << how << " -> " << got
             << " (expected " << *file.expect << ")\n";
    }
    text << matched << "/" << total << " verdicts match\n";
    json report = report_header("examples", o);
    report["results"] = std::move(results);
    report["matched"] = matched;
    report["total"] = total;
    emit(o, std::move(report), start, text.str());
    if (matched == total && total > 0) return exit_ok;
    return definitive_mismatch ? exit_negative : exit_unknown;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified stability checks for finitely generated quadratic modules"};
    app.require_subcommand(1);
    Options o;

    auto add_search = [&](CLI::App* c) {
        c->add_option("--seed", o.search.seed, "witness search seed");
        c->add_option("--max-scale", o.search.max_scale, "largest box exponent k for [-2^k,2^k]^n")
            ->check(CLI::NonNegativeNumber);
        c->add_option("--samples", o.search.samples_per_scale, "sample points per box")->check(CLI::PositiveNumber);
        c->add_option("--denom-bound", o.search.denom_bound, "largest sample denominator")
            ->check(CLI::PositiveNumber);
    };
    auto add_format = [&](CLI::App* c) {
        auto* text = c->add_flag("--text", o.text, "human-readable output");
        c->add_flag("--json", [&](std::int64_t) { o.text = false; }, "JSON output (default)")->excludes(text);
        c->add_flag("--timing", o.timing, "include wall-clock timing in the report");
    };

    auto* check = app.add_subcommand("check", "certify stability from z-gradings");
    check->add_option("system", o.system_path, "system file")->required();
    check->add_option("--z", o.zs, "z-vector, e.g. 1,-1 (repeatable)");
    check->add_flag("--preordering", o.preordering, "close generators under products");
    add_search(check);
    add_format(check);

    auto* term = app.add_subcommand("term-order", "decide total stability for a term order");
    term->add_option("system", o.system_path, "system file")->required();
    term->add_option("--order", o.order, "deglex:x,y or lex:x,y");
    term->add_flag("--preordering", o.preordering, "close generators under products");
    add_format(term);

    auto* bounded = app.add_subcommand("bounded", "bounded monomials on a union of tentacles");
    bounded->add_option("--z", o.zs, "tentacle direction (repeatable)")->required();
    add_format(bounded);

    auto* covering = app.add_subcommand("covering", "search a covering certificate between z-gradings");
    covering->add_option("--target", o.target, "z-vector to be covered")->required();
    covering->add_option("--z", o.zs, "covering z-vector (repeatable)")->required();
    covering->add_option("--bound", o.bound, "largest integer tried for r_j and t_j")->check(CLI::PositiveNumber);
    add_format(covering);

    auto* tentacle = app.add_subcommand("tentacle-sample", "sample generators along a tentacle");
    tentacle->add_option("system", o.system_path, "system file")->required();
    tentacle->add_option("--z", o.zs, "tentacle direction")->required();
    tentacle->add_option("--box", o.box, "interval lo:hi per coordinate (repeat in variable order)")->required();
    tentacle->add_option("--lambda", o.lambdas, "lambda >= 1 (repeatable; default 1 2 4)");
    tentacle->add_option("--grid", o.grid, "lattice points per coordinate")->check(CLI::PositiveNumber);
    tentacle->add_flag("--preordering", o.preordering, "close generators under products");
    add_format(tentacle);

    auto* suggest = app.add_subcommand("suggest-z", "list primitive z-vectors up to a bound");
    suggest->add_option("system", o.system_path, "system file (fixes the dimension)");
    suggest->add_option("--n", o.nvars, "dimension when no file is given");
    suggest->add_option("--bound", o.bound, "max |z_i|")->check(CLI::PositiveNumber);
    add_format(suggest);

    auto* examples = app.add_subcommand("examples", "run the bundled example systems");
    examples->add_option("--dir", o.data_dir, "directory of .qm files");
    examples->add_flag("--preordering", o.preordering, "close generators under products");
    add_search(examples);
    add_format(examples);

    auto* verify = app.add_subcommand("verify", "re-check a verdict from a JSON report");
    verify->add_option("system", o.system_path, "system file the report was made for")->required();
    verify->add_option("--report", o.report_path, "report JSON")->required();
    verify->add_flag("--preordering", o.preordering, "close generators under products");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_error;
    }

    // suggest-z defaults to a small bound rather than the covering bound.
    if (suggest->parsed() && suggest->count("--bound") == 0) o.bound = 1;

    try {
        if (check->parsed()) return cmd_check(o);
        if (term->parsed()) return cmd_term_order(o);
        if (bounded->parsed()) return cmd_bounded(o);
        if (covering->parsed()) return cmd_covering(o);
        if (tentacle->parsed()) return cmd_tentacle(o);
        if (suggest->parsed()) return cmd_suggest(o);
        if (examples->parsed()) return cmd_examples(o);
        if (verify->parsed()) return cmd_verify(o);
    } catch (const qmstab::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed report: " << e.what() << '\n';
        return exit_error;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}
