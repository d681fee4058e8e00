// One line per acceptance criterion; exit status is nonzero if any criterion fails.
#include "fpqs/fpqs.hpp"
#include "fpqs/io.hpp"

#include <chrono>
#include <cstdio>
#include <map>

using namespace fpqs;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Line {
    int id;
    std::string title;
    bool pass;
    std::string detail;
};

std::string failing_cases(const SuiteReport& r) {
    std::string out;
    for (const auto& c : r.cases)
        if (!c.pass) {
            char buf[64];
            std::snprintf(buf, sizeof buf, " (measured %.6g)", c.measured);
            out += (out.empty() ? "" : "; ") + c.description + buf + (c.diagnostics.empty() ? "" : " [" + c.diagnostics + "]");
        }
    return out;
}

Line from_suites(int id, std::string title, const std::vector<const SuiteReport*>& rs, double limit_s) {
    bool ok = true;
    double t = 0.0;
    std::string fails;
    for (const auto* r : rs) {
        ok = ok && r->pass();
        t += r->wall_time;
        const std::string f = failing_cases(*r);
        if (!f.empty()) fails += (fails.empty() ? "" : "; ") + r->suite_id + ": " + f;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.2f s (limit %.0f s)", t, limit_s);
    std::string detail = buf;
    if (t >= limit_s) {
        ok = false;
        detail += "; time limit exceeded";
    }
    if (!fails.empty()) detail += "; failing: " + fails;
    return {id, std::move(title), ok, detail};
}

Line closed_form_timing(const SuiteReport& r) {
    // the suite checks the values; here each integral is also timed on its own
    bool ok = r.pass();
    double worst = 0.0;
    for (double beta : {-0.5, 0.0, 0.5, 2.0, 4.5}) {
        const auto t0 = Clock::now();
        auto q = integrate_disk([](cplx) { return 1.0; }, beta);
        worst = std::max(worst, seconds_since(t0));
        ok = ok && std::abs(q.value - 1.0 / (1.0 + beta)) <= 1e-8 / (1.0 + beta);
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "slowest integral %.4f s (limit 1 s)", worst);
    std::string detail = buf;
    if (worst >= 1.0) ok = false;
    const std::string f = failing_cases(r);
    if (!f.empty()) detail += "; failing: " + f;
    return {1, "quadrature_closed_form: weight integrals to 1e-8", ok && worst < 1.0, detail};
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    const std::vector<SuiteReport> first = run_all();
    const double first_wall = seconds_since(t0);
    const auto t1 = Clock::now();
    const std::vector<SuiteReport> second = run_all();
    const double second_wall = seconds_since(t1);

    std::map<std::string, const SuiteReport*> by_id;
    for (const auto& r : first) by_id[r.suite_id] = &r;
    auto S = [&](const char* id) { return by_id.at(id); };

    std::vector<Line> lines;
    lines.push_back(closed_form_timing(*S("quadrature_closed_form")));
    lines.push_back(from_suites(2, "geometry: identities on 1e3 random pairs", {S("geometry")}, 1.0));
    lines.push_back(from_suites(3, "area_carleson: area measure is 2-Carleson", {S("area_carleson")}, 10.0));
    lines.push_back(from_suites(4, "lemma4b: kernel/box equivalence on the 6-measure family", {S("lemma4b")}, 120.0));
    lines.push_back(from_suites(5, "prop16: kernel-form tent norm consistency", {S("prop16")}, 120.0));
    lines.push_back(from_suites(6, "lemma6_cor7: kernel-pair regime sweeps", {S("lemma6_cor7")}, 60.0));
    lines.push_back(from_suites(7, "lemma8: uniform bound plateau", {S("lemma8")}, 60.0));
    lines.push_back(from_suites(8, "mobius_invariance: seminorm of f o phi_a (alpha=1)", {S("mobius_invariance")}, 60.0));
    lines.push_back(from_suites(9, "theorem2: sufficiency and necessity mechanism", {S("theorem2")}, 120.0));
    lines.push_back(
        from_suites(10, "theorem13+theorem14: Carleson mechanisms", {S("theorem13"), S("theorem14")}, 120.0));
    lines.push_back(from_suites(11, "operator_algebra: product rule and coefficient paths", {S("operator_algebra")}, 1.0));
    lines.push_back(from_suites(12, "prop_pn: restriction trend", {S("prop_pn")}, 60.0));

    const std::string a = io::dump(io::to_json(first)), b = io::dump(io::to_json(second));
    {
        char buf[160];
        std::snprintf(buf, sizeof buf, "JSON %s (%zu bytes); full runs %.1f s and %.1f s (limit 600 s)",
                      a == b ? "byte-identical" : "DIFFERS", a.size(), first_wall, second_wall);
        lines.push_back({13, "determinism: verify all twice", a == b && first_wall < 600.0 && second_wall < 600.0, buf});
    }

    int failed = 0;
    for (const auto& l : lines) {
        std::printf("[%s] %2d %s: %s\n", l.pass ? "PASS" : "FAIL", l.id, l.title.c_str(), l.detail.c_str());
        failed += !l.pass;
    }
    std::printf("%d/%zu criteria passed\n", int(lines.size()) - failed, lines.size());
    return failed ? 1 : 0;
}
