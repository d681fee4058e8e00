// fpqs: norms, Carleson constants, operator reports and verification suites.
//
//   fpqs norm fps --f "log:0.9" --p 2 --alpha 1 --s 1
//   fpqs carleson box --mu "power:2" --s 2 --depth 12
//   fpqs verify all --out report.json
//
// Exit codes: 0 success, 1 parse/validation error, 2 suite failure.

#include "fpqs/fpqs.hpp"
#include "fpqs/io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using fpqs::io::Json;

struct Context {
    int depth = 12;
    int nodes = 8;
    double rel_tol = 1e-7;
    std::string out;
    std::string format = "json";
    int threads = 0;
    unsigned long long seed = 0;
    std::string spec_file;

    std::string f, mu, g;
    double p = 2.0, alpha = 1.0, s = 1.0, t = 1.0, gamma = 0.0;
    double r = 0.4, cap = 0.9;
    std::string suite;

    fpqs::QuadratureSpec quad() const {
        fpqs::QuadratureSpec q;
        q.panel_nodes = nodes;
        q.rel_tol = rel_tol;
        return q;
    }
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// "key = value" lines; '#' starts a comment.  Fills f / mu / g not given on the command line.
void load_spec_file(Context& ctx) {
    if (ctx.spec_file.empty()) return;
    std::ifstream in(ctx.spec_file);
    if (!in) throw UsageError("cannot read spec file '" + ctx.spec_file + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        const std::string trimmed = fpqs::io::trim(line);
        if (trimmed.empty()) continue;
        const auto eq = trimmed.find('=');
        if (eq == std::string::npos)
            throw UsageError("spec file line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = fpqs::io::trim(trimmed.substr(0, eq));
        const std::string val = fpqs::io::trim(trimmed.substr(eq + 1));
        std::string* slot = key == "f" ? &ctx.f : key == "mu" ? &ctx.mu : key == "g" ? &ctx.g : nullptr;
        if (!slot) throw UsageError("spec file line " + std::to_string(lineno) + ": unknown key '" + key + "' (valid: f, mu, g)");
        if (slot->empty()) *slot = val;
    }
}

const std::string& need(const std::string& v, const char* name) {
    if (v.empty()) throw UsageError(std::string("missing --") + name + " (or '" + name + " = ...' in --spec-file)");
    return v;
}

void emit(const Context& ctx, const Json& j, const std::string& csv) {
    const std::string text = ctx.format == "csv" ? csv : fpqs::io::dump(j);
    if (ctx.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream o(ctx.out, std::ios::binary);
    if (!o) throw UsageError("cannot write '" + ctx.out + "'");
    o << text;
}

Json envelope(const std::string& command, Json inputs, Json result) {
    Json j;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["result"] = std::move(result);
    return j;
}

Json params_json(const fpqs::SpaceParams& P) {
    return {{"p", fpqs::io::num(P.p)}, {"alpha", fpqs::io::num(P.alpha)}, {"s", fpqs::io::num(P.s)}};
}

int run_norm(const Context& ctx, const std::string& kind) {
    const auto f = fpqs::io::parse_function(need(ctx.f, "f"));
    Json in{{"f", fpqs::io::format_function(f)}};
    fpqs::ConstantReport rep;
    if (kind == "fps" || kind == "logf") {
        const fpqs::SpaceParams P(ctx.p, ctx.alpha, ctx.s);
        in["params"] = params_json(P);
        rep = kind == "fps" ? fpqs::fps_seminorm(fpqs::deriv(f), P, {}, ctx.quad())
                            : fpqs::logF_seminorm(fpqs::deriv(f), P, {}, ctx.quad());
        Json res = fpqs::io::to_json(rep);
        res["full_norm"] = fpqs::io::num(std::abs(f.eval(0.0)) + rep.value);
        emit(ctx, envelope("norm " + kind, in, res), fpqs::io::report_csv(rep));
        return 0;
    }
    if (kind == "bloch") {
        in["alpha"] = fpqs::io::num(ctx.alpha);
        rep = fpqs::bloch_norm(fpqs::deriv(f), ctx.alpha);
        Json res = fpqs::io::to_json(rep);
        res["full_norm"] = fpqs::io::num(std::abs(f.eval(0.0)) + rep.value);
        emit(ctx, envelope("norm bloch", in, res), fpqs::io::report_csv(rep));
        return 0;
    }
    if (kind == "dirichlet") {
        in["p"] = fpqs::io::num(ctx.p);
        in["gamma"] = fpqs::io::num(ctx.gamma);
        const double v = fpqs::dirichlet_norm(f, ctx.p, ctx.gamma, ctx.quad());
        emit(ctx, envelope("norm dirichlet", in, Json{{"value", fpqs::io::num(v)}}),
             "value\n" + fpqs::io::csv_num(v) + "\n");
        return 0;
    }
    // tent
    const auto mu = fpqs::io::parse_measure(need(ctx.mu, "mu"));
    in["mu"] = fpqs::io::format_measure(mu);
    in["p"] = fpqs::io::num(ctx.p);
    in["s"] = fpqs::io::num(ctx.s);
    in["depth"] = ctx.depth;
    rep = fpqs::tent_norm(f, mu, ctx.p, ctx.s, ctx.depth, ctx.quad());
    emit(ctx, envelope("norm tent", in, fpqs::io::to_json(rep)), fpqs::io::report_csv(rep));
    return 0;
}

int run_carleson(const Context& ctx, const std::string& kind) {
    const auto mu = fpqs::io::parse_measure(need(ctx.mu, "mu"));
    Json in{{"mu", fpqs::io::format_measure(mu)}, {"s", fpqs::io::num(ctx.s)}};
    if (kind == "box") {
        in["depth"] = ctx.depth;
        auto rep = fpqs::carleson_constant(mu, ctx.s, ctx.depth, ctx.quad());
        emit(ctx, envelope("carleson box", in, fpqs::io::to_json(rep)), fpqs::io::report_csv(rep));
    } else if (kind == "log") {
        in["p"] = fpqs::io::num(ctx.p);
        in["depth"] = ctx.depth;
        auto rep = fpqs::log_carleson_constant(mu, ctx.p, ctx.s, ctx.depth, ctx.quad());
        emit(ctx, envelope("carleson log", in, fpqs::io::to_json(rep)), fpqs::io::report_csv(rep));
    } else if (kind == "blasco") {
        in["p"] = fpqs::io::num(ctx.p);
        in["t"] = fpqs::io::num(ctx.t);
        auto rep = fpqs::blasco_constant(mu, ctx.p, ctx.s, ctx.t, {}, ctx.quad());
        emit(ctx, envelope("carleson blasco", in, fpqs::io::to_json(rep)), fpqs::io::report_csv(rep));
    } else {
        in["p"] = fpqs::io::num(ctx.p);
        in["depth"] = ctx.depth;
        auto prof = fpqs::vanishing_profile(mu, ctx.p, ctx.s, ctx.depth, ctx.quad());
        Json arr = Json::array();
        std::ostringstream csv;
        csv << "k,sup\n";
        for (auto [k, v] : prof) {
            arr.push_back(Json::array({k, fpqs::io::num(v)}));
            csv << k << ',' << fpqs::io::csv_num(v) << '\n';
        }
        emit(ctx, envelope("carleson vanishing", in, Json{{"profile", arr}}), csv.str());
    }
    return 0;
}

int run_embed(const Context& ctx) {
    const auto mu = fpqs::io::parse_measure(need(ctx.mu, "mu"));
    const fpqs::SpaceParams P(ctx.p, ctx.alpha, ctx.s);
    Json in{{"mu", fpqs::io::format_measure(mu)}, {"params", params_json(P)}, {"depth", ctx.depth},
            {"battery", "standard"}};
    auto rep = fpqs::embedding_ratio(fpqs::standard_battery(P.alpha), mu, P, ctx.depth, {}, ctx.quad());
    emit(ctx, envelope("embed", in, fpqs::io::to_json(rep)), fpqs::io::embedding_csv(rep));
    return 0;
}

int run_op(const Context& ctx, const std::string& kind) {
    const auto g = fpqs::io::parse_function(need(ctx.g, "g"));
    const fpqs::SpaceParams P(ctx.p, ctx.alpha, ctx.s);
    const auto k = kind == "jg" ? fpqs::OperatorKind::Jg : kind == "ig" ? fpqs::OperatorKind::Ig : fpqs::OperatorKind::Mg;
    Json in{{"g", fpqs::io::format_function(g)}, {"params", params_json(P)}, {"depth", ctx.depth},
            {"battery", "standard"}};
    auto rep = fpqs::operator_boundedness_report(g, P, k, fpqs::standard_battery(P.alpha), ctx.depth, {}, ctx.quad());
    emit(ctx, envelope("op " + kind, in, fpqs::io::to_json(rep)), fpqs::io::operator_csv(rep));
    return 0;
}

int run_verify(const Context& ctx) {
    std::vector<fpqs::SuiteReport> reps;
    if (ctx.suite == "all")
        reps = fpqs::run_all();
    else
        reps.push_back(fpqs::run_suite(ctx.suite));
    emit(ctx, fpqs::io::to_json(reps), fpqs::io::suites_csv(reps));
    bool ok = true;
    for (const auto& r : reps) {
        ok = ok && r.pass();
        if (!r.pass()) {
            for (const auto& c : r.cases)
                if (!c.pass) std::cerr << "FAIL " << r.suite_id << ": " << c.description << "\n";
        }
    }
    return ok ? 0 : 2;
}

int run_lattice(const Context& ctx) {
    if (!(ctx.r > 0.0)) throw UsageError("--r must be > 0");
    if (!(ctx.cap > 0.0 && ctx.cap < 1.0)) throw UsageError("--cap must lie in (0,1)");
    const auto pts = fpqs::build_r_lattice(ctx.r, ctx.cap);
    Json arr = Json::array();
    std::ostringstream csv;
    csv << "re,im\n";
    for (const auto& z : pts) {
        const fpqs::cplx c = z;
        arr.push_back(fpqs::io::point_json(c));
        csv << fpqs::io::csv_num(c.real()) << ',' << fpqs::io::csv_num(c.imag()) << '\n';
    }
    Json in{{"r", fpqs::io::num(ctx.r)}, {"cap", fpqs::io::num(ctx.cap)}};
    emit(ctx, envelope("lattice", in, Json{{"count", pts.size()}, {"points", arr}}), csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Context ctx;
    CLI::App app{"fpqs: F(p,q,s) norms, (log-)Carleson constants and verification suites on the unit disk"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--depth", ctx.depth, "dyadic depth for arc sups")->check(CLI::Range(0, 20));
    app.add_option("--nodes", ctx.nodes, "Gauss points per panel at the first refinement level")->check(CLI::Range(2, 64));
    app.add_option("--rel-tol", ctx.rel_tol, "relative tolerance for convergence")->check(CLI::PositiveNumber);
    app.add_option("--out", ctx.out, "write output to this path instead of stdout");
    app.add_option("--format", ctx.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", ctx.threads, "worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", ctx.seed, "seed for randomized inputs (suites pin their own)");
    app.add_option("--spec-file", ctx.spec_file, "file with 'f = ...', 'mu = ...', 'g = ...' lines");

    std::string kind;
    auto fn_help = std::string("function spec; kinds: ") + fpqs::io::kFunctionKinds;
    auto mu_help = std::string("measure spec; kinds: ") + fpqs::io::kMeasureKinds;

    auto* norm = app.add_subcommand("norm", "function-space norms");
    norm->add_option("kind", kind, "fps | bloch | dirichlet | tent | logf")
        ->required()
        ->check(CLI::IsMember({"fps", "bloch", "dirichlet", "tent", "logf"}));
    norm->add_option("--f", ctx.f, fn_help);
    norm->add_option("--mu", ctx.mu, mu_help);
    norm->add_option("--p", ctx.p, "integrability exponent");
    norm->add_option("--alpha", ctx.alpha, "weight exponent");
    norm->add_option("--s", ctx.s, "Mobius exponent / arc exponent");
    norm->add_option("--gamma", ctx.gamma, "Dirichlet weight exponent");

    auto* carl = app.add_subcommand("carleson", "Carleson-type constants of a measure");
    carl->add_option("kind", kind, "box | log | blasco | vanishing")
        ->required()
        ->check(CLI::IsMember({"box", "log", "blasco", "vanishing"}));
    carl->add_option("--mu", ctx.mu, mu_help);
    carl->add_option("--p", ctx.p, "log exponent")->default_val(0.0);
    carl->add_option("--s", ctx.s, "arc exponent");
    carl->add_option("--t", ctx.t, "kernel exponent (blasco)");

    auto* embed = app.add_subcommand("embed", "embedding ratios over the standard battery");
    embed->add_option("--mu", ctx.mu, mu_help);
    embed->add_option("--p", ctx.p, "integrability exponent");
    embed->add_option("--alpha", ctx.alpha, "weight exponent");
    embed->add_option("--s", ctx.s, "Mobius exponent");

    auto* op = app.add_subcommand("op", "operator boundedness report");
    op->add_option("kind", kind, "jg | ig | mg")->required()->check(CLI::IsMember({"jg", "ig", "mg"}));
    op->add_option("--g", ctx.g, "symbol; " + fn_help);
    op->add_option("--p", ctx.p, "integrability exponent");
    op->add_option("--alpha", ctx.alpha, "weight exponent");
    op->add_option("--s", ctx.s, "Mobius exponent");

    auto* verify = app.add_subcommand("verify", "run a verification suite or all of them");
    std::string ids = "all";
    for (const auto& id : fpqs::suite_ids()) ids += " | " + id;
    verify->add_option("suite", ctx.suite, ids)->required();

    auto* lattice = app.add_subcommand("lattice", "hyperbolic r-lattice point list");
    lattice->add_option("--r", ctx.r, "lattice radius (Bergman metric)");
    lattice->add_option("--cap", ctx.cap, "largest |a|");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        fpqs::set_thread_count(ctx.threads);
        load_spec_file(ctx);
        if (*norm) return run_norm(ctx, kind);
        if (*carl) return run_carleson(ctx, kind);
        if (*embed) return run_embed(ctx);
        if (*op) return run_op(ctx, kind);
        if (*verify) return run_verify(ctx);
        if (*lattice) return run_lattice(ctx);
    } catch (const std::invalid_argument& e) {
        // parse errors, bad parameters, unknown suite ids
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
