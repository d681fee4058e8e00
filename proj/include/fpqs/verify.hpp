#pragma once
// Named verification suites.  Each pins its own parameter grid; a case passes iff its
// measured value lies in the bracket (or its trend holds) and every inner computation
// converged.  Suites never throw: a failing inner computation becomes a failed case.

#include "fpqs/carleson.hpp"
#include "fpqs/disk.hpp"
#include "fpqs/funcspace.hpp"
#include "fpqs/measures.hpp"
#include "fpqs/norms.hpp"
#include "fpqs/operators.hpp"
#include "fpqs/quadrature.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fpqs {

inline constexpr const char* kSuiteVersion = "v1";
inline constexpr double kBoundedFactor = 64.0;  // "bounded" = at most 64 x the in-suite median
inline constexpr double kHuge = 1e300;

struct SuiteCase {
    std::string description;
    double measured = 0.0;
    double lo = 0.0, hi = 0.0;
    std::string trend;            // empty for bracket cases
    std::vector<double> values;   // the sequence a trend case was judged on
    bool converged = true;
    bool pass = false;
    std::string diagnostics;
};

struct SuiteReport {
    std::string suite_id;
    std::vector<SuiteCase> cases;
    double wall_time = 0.0;  // seconds; kept out of serialized reports (not reproducible)

    bool pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return !cases.empty();
    }
};

namespace verify_detail {

class Builder {
    static void note_convergence(SuiteCase& c) {
        if (c.converged) return;
        c.diagnostics = c.diagnostics.empty() ? "inner computation did not converge"
                                              : c.diagnostics + "; inner computation did not converge";
    }

public:
    explicit Builder(std::string id) { rep_.suite_id = std::move(id); }

    SuiteCase& bracket(std::string desc, double measured, double lo, double hi, bool converged = true,
                       std::string diag = {}) {
        SuiteCase c;
        c.description = std::move(desc);
        c.measured = measured;
        c.lo = lo;
        c.hi = hi;
        c.converged = converged;
        c.diagnostics = std::move(diag);
        c.pass = converged && std::isfinite(measured) && measured >= lo && measured <= hi;
        note_convergence(c);
        rep_.cases.push_back(std::move(c));
        return rep_.cases.back();
    }

    // "increasing": measured = min relative step, must be >= lo (> 0).
    // "nonincreasing": measured = max relative step, must be <= 0.
    // "nonincreasing, final < first": additionally the last value is strictly below the first.
    SuiteCase& trend(std::string desc, const std::string& kind, std::vector<double> v, bool converged = true,
                     std::string diag = {}) {
        SuiteCase c;
        c.description = std::move(desc);
        c.trend = kind;
        c.converged = converged;
        c.diagnostics = std::move(diag);
        bool ok = v.size() >= 2;
        double m = kind == "increasing" ? kHuge : -kHuge;
        for (std::size_t i = 0; ok && i + 1 < v.size(); ++i) {
            if (!(std::isfinite(v[i]) && std::isfinite(v[i + 1]) && v[i] != 0.0)) {
                ok = false;
                break;
            }
            const double step = (v[i + 1] - v[i]) / std::abs(v[i]);
            m = kind == "increasing" ? std::min(m, step) : std::max(m, step);
        }
        if (kind == "increasing") {
            c.lo = 1e-6;
            c.hi = kHuge;
        } else {
            c.lo = -kHuge;
            c.hi = 0.0;
        }
        c.measured = ok ? m : std::numeric_limits<double>::quiet_NaN();
        bool pass = ok && c.measured >= c.lo && c.measured <= c.hi;
        if (kind == "nonincreasing, final < first") pass = pass && v.back() < v.front();
        c.values = std::move(v);
        c.pass = converged && pass;
        note_convergence(c);
        rep_.cases.push_back(std::move(c));
        return rep_.cases.back();
    }

    // Runs `body`; an exception turns into a failed case instead of aborting the suite.
    void guarded(const std::string& desc, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            SuiteCase c;
            c.description = desc;
            c.measured = std::numeric_limits<double>::quiet_NaN();
            c.converged = false;
            c.diagnostics = std::string("exception: ") + e.what();
            rep_.cases.push_back(std::move(c));
        }
    }

    SuiteReport finish(std::chrono::steady_clock::time_point t0) {
        rep_.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return std::move(rep_);
    }

private:
    SuiteReport rep_;
};

inline std::string fmt(double x) {
    std::ostringstream o;
    o.precision(6);
    o << x;
    return o.str();
}

inline std::string fmt(cplx z) {
    std::ostringstream o;
    o.precision(6);
    o << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return o.str();
}

inline std::string params_str(const SpaceParams& P) {
    return "(p,alpha,s)=(" + fmt(P.p) + "," + fmt(P.alpha) + "," + fmt(P.s) + ")";
}

// max / median of a positive family, i.e. the bound-relative-to-reference ratio
inline double spread(const std::vector<double>& v) {
    const double med = median(v);
    double mx = 0.0;
    for (double x : v) mx = std::max(mx, x);
    return med > 0.0 ? mx / med : std::numeric_limits<double>::infinity();
}

inline double rel_diff(double a, double b) {
    const double d = std::abs(a - b), m = std::max(std::abs(a), std::abs(b));
    return m > 0.0 ? d / m : d;
}

inline std::vector<cplx> random_disk_points(std::mt19937_64& rng, std::size_t n, double rmax) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<cplx> out(n);
    for (auto& z : out) z = std::polar(rmax * std::sqrt(u(rng)), kTwoPi * u(rng));
    return out;
}

inline std::vector<cplx> random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<cplx> c(deg(rng) + 1);
    for (auto& x : c) x = cplx(n(rng), n(rng));
    return c;
}

}  // namespace verify_detail

// ---- suites -------------------------------------------------------------------------

inline SuiteReport suite_quadrature_closed_form() {
    auto t0 = std::chrono::steady_clock::now();
    verify_detail::Builder b("quadrature_closed_form");
    for (double beta : {-0.5, 0.0, 0.5, 2.0, 4.5}) {
        const std::string d = "int (1-|z|^2)^beta dA = 1/(1+beta), beta=" + verify_detail::fmt(beta) + " (rel. error)";
        b.guarded(d, [&] {
            auto r = integrate_disk([](cplx) { return 1.0; }, beta);
            b.bracket(d, std::abs(r.value * (1.0 + beta) - 1.0), 0.0, 1e-8, r.converged);
        });
    }
    const std::string d = "int |1-0.9z|^-2 dA = log(1/0.19)/0.81 (rel. error, graded rule)";
    b.guarded(d, [&] {
        auto r = integrate_disk([](cplx z) { return 1.0 / std::norm(1.0 - 0.9 * z); }, 0.0, {}, {cplx(0.9)});
        const double exact = std::log(1.0 / 0.19) / 0.81;
        b.bracket(d, std::abs(r.value / exact - 1.0), 0.0, 1e-8, r.converged);
    });
    return b.finish(t0);
}

inline SuiteReport suite_geometry() {
    auto t0 = std::chrono::steady_clock::now();
    verify_detail::Builder b("geometry");
    std::mt19937_64 rng(20240611);
    const auto as = verify_detail::random_disk_points(rng, 1000, 0.99);
    const auto zs = verify_detail::random_disk_points(rng, 1000, 0.99);
    double inv = 0, chain = 0, ident = 0;
    for (std::size_t i = 0; i < as.size(); ++i) {
        const cplx a = as[i], z = zs[i];
        const cplx w = mobius(a, z);
        inv = std::max(inv, std::abs(mobius(a, w) - z));
        // phi_a o phi_a = id, so phi_a'(phi_a(z)) phi_a'(z) = 1
        chain = std::max(chain, std::abs(mobius_deriv(a, w) * mobius_deriv(a, z) - 1.0));
        const double lhs = one_minus_phi_sq(a, z);
        const double rhs = (1.0 - std::abs(z)) * (1.0 + std::abs(z)) * std::abs(mobius_deriv(a, z));
        ident = std::max(ident, verify_detail::rel_diff(lhs, rhs));
    }
    b.bracket("involution |phi_a(phi_a(z)) - z|, 1000 random pairs", inv, 0.0, 1e-12);
    b.bracket("derivative consistency |phi_a'(phi_a(z)) phi_a'(z) - 1|, 1000 random pairs", chain, 0.0, 1e-12);
    b.bracket("1-|phi_a(z)|^2 = (1-|z|^2)|phi_a'(z)| (rel. error), 1000 random pairs", ident, 0.0, 1e-12);
    return b.finish(t0);
}

inline SuiteReport suite_area_carleson() {
    auto t0 = std::chrono::steady_clock::now();
    verify_detail::Builder b("area_carleson");
    const int depth = 12;
    b.guarded("per-arc value of the area measure equals 2-|I|", [&] {
        const auto arcs = dyadic_arcs(depth);
        const MeasureForm form = normal_form(area_measure());
        auto errs = parallel_map<double>(arcs.size(), [&](std::size_t i) {
            const Arc& I = arcs[i];
            auto r = integrate_measure(form, [](cplx) { return 1.0; }, Region::of(CarlesonBox{I}), 0.0,
                                       QuadratureSpec{}.single_level());
            return std::abs(r.value / (I.length * I.length) - (2.0 - I.length));
        });
        double mx = 0.0;
        for (double e : errs) mx = std::max(mx, e);
        b.bracket("max over dyadic arcs (depth 12) of |mu(S(I))/|I|^2 - (2-|I|)|", mx, 0.0, 1e-10);
    });
    b.guarded("area measure, s=2, depth 12", [&] {
        auto c = carleson_constant(area_measure(), 2.0, depth);
        b.bracket("area measure s=2 dyadic sup at depth 12", c.value, 1.98, 2.0, c.converged);
    });
    b.guarded("unit atom at the origin", [&] {
        auto c = carleson_constant(atomic({{DiskPoint(0.0), 1.0}}), 1.0, depth);
        b.bracket("unit atom at the origin lies in no Carleson box", c.value, 0.0, 0.0, c.converged);
    });
    return b.finish(t0);
}

// Builtin measure family for the kernel-vs-box comparisons.
inline std::vector<std::pair<std::string, MeasureSpec>> lemma4b_family(double p, double s) {
    std::vector<std::pair<std::string, MeasureSpec>> fam;
    fam.emplace_back("power(sigma=s)", power_density(s));
    fam.emplace_back("logpower(sigma=s,tau=p)", log_power_density(s, p));
    fam.emplace_back("atomic{0.5:1}", atomic({{DiskPoint(0.5), 1.0}}));
    fam.emplace_back("atomic{0.9i:0.3,-0.7:0.5}", atomic({{DiskPoint(0.0, 0.9), 0.3}, {DiskPoint(-0.7), 0.5}}));
    fam.emplace_back("induced(log(0.9);2,1,s)", induced(log_kernel(DiskPoint(0.9)), SpaceParams(2.0, 1.0, s)));
    fam.emplace_back("separable(u^(s-1), 1+0.5cos)",
                     separable({ms::RadialProfile::Power, s - 1.0, 0.0}, {ms::AngularProfile::Cosine, 0.5, 0.25}));
    return fam;
}

inline SuiteReport suite_lemma4b() {
    auto t0 = std::chrono::steady_clock::now();
    verify_detail::Builder b("lemma4b");
    const int depth = 12;
    const double pst[3][3] = {{2, 1, 1}, {1, 0.5, 2}, {0, 2, 1}};
    for (const auto& g : pst) {
        const double p = g[0], s = g[1], t = g[2];
        for (const auto& [name, mu] : lemma4b_family(p, s)) {
            const std::string d = "blasco/log-box ratio, " + name + ", (p,s,t)=(" + verify_detail::fmt(p) + "," +
                                  verify_detail::fmt(s) + "," + verify_detail::fmt(t) + ")";
            b.guarded(d, [&] {
                auto bl = blasco_constant(mu, p, s, t);
                auto lc = log_carleson_constant(mu, p, s, depth);
                b.bracket(d, bl.value / lc.value, 1.0 / kBoundedFactor, kBoundedFactor, bl.converged && lc.converged,
                          "blasco=" + verify_detail::fmt(bl.value) + " box=" + verify_detail::fmt(lc.value));
            });
        }
    }
    return b.finish(t0);
}

inline SuiteReport suite_prop16() {
    auto t0 = std::chrono::steady_clock::now();
    verify_detail::Builder b("prop16");
    const int depth = 10;
    // f = 1: the kernel form of the tent norm is the p = 0 kernel constant
    {
        const std::vector<std::pair<std::string, MeasureSpec>> ms{
            {"power(1.5)", power_density(1.5)},
            {"atomic{0.5:1,0.9i:0.3}", atomic({{DiskPoint(0.5), 1.0}, {DiskPoint(0.0, 0.9), 0.3}})}};
        for (const auto& [name, mu] : ms) {
            const std::string d = "f=1 kernel-form tent norm^p vs kernel constant at p=0, " + name;
            b.guarded(d, [&] {
                auto tk = tent_norm_kernel_form(constant(1.0), mu, 2.0, 1.5, 1.0);
                auto bl = blasco_constant(mu, 0.0, 1.5, 1.0);
                b.bracket(d, verify_detail::rel_diff(tk.raw_value, bl.raw_value), 0.0, 1e-6,
                          tk.converged && bl.converged);
            });
        }
    }
    struct Case {
        std::string name;
        AnalyticFunction f;
        MeasureSpec mu;
        double p, s, t;
    };
    const std::vector<Case> cases{
        {"f=1, power(1.5)", constant(1.0), power_density(1.5), 2, 1.5, 1},
        {"f=z, area", identity(), area_measure(), 2, 2, 1},
        {"f=log(0.9), power(1.5)", log_kernel(DiskPoint(0.9)), power_density(1.5), 2, 1.5, 1},
        {"f=power(0.9,0.25), logpower(1.5,2)", power_kernel(DiskPoint(0.9), 0.25), log_power_density(1.5, 2), 2, 1.5,
         1},
        {"f=1+z+z^2, atomic{0.5:1,0.9i:0.3}", polynomial({1.0, 1.0, 1.0}),
         atomic({{DiskPoint(0.5), 1.0}, {DiskPoint(0.0, 0.9), 0.3}}), 1, 1, 2},
        {"f=logsq(0.9i), separable(u^0, 1+0.5cos)", normalized_log_square(DiskPoint(0.0, 0.9)),
         separable({ms::RadialProfile::Power, 0.0, 0.0}, {ms::AngularProfile::Cosine, 0.5, 0.0}), 1, 1, 1},
    };
    for (const auto& c : cases) {
        const std::string d = "box/kernel tent norm ratio, " + c.name + ", (p,s,t)=(" + verify_detail::fmt(c.p) + "," +
                              verify_detail::fmt(c.s) + "," + verify_detail::fmt(c.t) + ")";
        b.guarded(d, [&] {
            auto box = tent_norm(c.f, c.mu, c.p, c.s, depth);
            auto ker = tent_norm_kernel_form(c.f, c.mu, c.p, c.s, c.t);
            b.bracket(d, box.value / ker.value, 1.0 / kBoundedFactor, kBoundedFactor, box.converged && ker.converged,
                      "box=" + verify_detail::fmt(box.value) + " kernel=" + verify_detail::fmt(ker.value));
        });
    }
    return b.finish(t0);
}

inline SuiteReport suite_lemma6_cor7() {
    auto t0 = std::chrono::steady_clock::now();
    verify_detail::Builder b("lemma6_cor7");
    using verify_detail::fmt;
    const std::vector<cplx> grid{0.0, 0.5, cplx(0.0, 0.8), -0.9, std::polar(0.95, std::numbers::pi / 3)};

    for (auto [s, r, t] : {std::tuple{0.0, 1.5, 1.5}, std::tuple{0.5, 3.0, 1.0}, std::tuple{-0.5, 1.0, 1.0}}) {
        const std::string d = "a=b=0 gives 1/(s+1), (s,r,t)=(" + fmt(s) + "," + fmt(r) + "," + fmt(t) + ")";
        b.guarded(d, [&] {
            auto res = lemma6_estimate(DiskPoint(0.0), DiskPoint(0.0), s, r, t);
            b.bracket(d, verify_detail::rel_diff(res.value, 1.0 / (s + 1.0)), 0.0, 1e-10, res.converged);
        });
    }

    struct Regime {
        double s, r, t;
        const char* tag;
    };
    for (const Regime& R : {Regime{0, 1.5, 1.5, "r,t<2+s"}, Regime{0, 3, 1, "t<2+s<r"}, Regime{0, 1, 3, "r<2+s<t"},
                            Regime{0, 3, 3, "r,t>2+s"}}) {
        const std::string d = std::string("regime ") + R.tag + " (s,r,t)=(" + fmt(R.s) + "," + fmt(R.r) + "," +
                              fmt(R.t) + "): max/median of value/bound over 5x5 grid";
        b.guarded(d, [&] {
            std::vector<std::pair<cplx, cplx>> pairs;
            for (cplx a : grid)
                for (cplx bb : grid) pairs.emplace_back(a, bb);
            auto res = parallel_map<Lemma6Result>(pairs.size(), [&](std::size_t i) {
                return lemma6_estimate(DiskPoint(pairs[i].first), DiskPoint(pairs[i].second), R.s, R.r, R.t);
            });
            std::vector<double> ratios;
            bool conv = true;
            std::string diag;
            for (const auto& x : res) {
                conv = conv && x.converged;
                if (x.regime != R.tag) diag = "regime mismatch: " + x.regime;
                ratios.push_back(x.value / x.bound);
            }
            b.bracket(d, verify_detail::spread(ratios), 0.0, kBoundedFactor, conv && diag.empty(), diag);
        });
    }

    {
        const std::string d = "symmetry I(a,b)=I(b,a) for r=t (rel. difference)";
        b.guarded(d, [&] {
            double mx = 0.0;
            bool conv = true;
            for (auto [a, bb] : {std::pair{grid[1], grid[2]}, std::pair{grid[3], grid[4]}}) {
                auto x = lemma6_estimate(DiskPoint(a), DiskPoint(bb), 0.0, 1.5, 1.5);
                auto y = lemma6_estimate(DiskPoint(bb), DiskPoint(a), 0.0, 1.5, 1.5);
                conv = conv && x.converged && y.converged;
                mx = std::max(mx, verify_detail::rel_diff(x.value, y.value));
            }
            b.bracket(d, mx, 0.0, 1e-7, conv);
        });
    }

    // the instantiation used for the test family: s'=s+p alpha-2, r=2s, t=p alpha, p=2, alpha=1, s=0.8,
    // and the boundary exponent r = 2 + s'
    const double sp = 0.8;
    for (auto [r, t, label] : {std::tuple{1.6, 2.0, "r=2s"}, std::tuple{2.8, 2.0, "r=2+s' (boundary)"}}) {
        const std::string d = std::string("weighted kernel integral, ") + label + ", b=0.9, |a| sweep: max/median";
        b.guarded(d, [&] {
            std::vector<double> ratios;
            for (double am : {0.0, 0.5, 0.9, 0.95, 0.99})
                ratios.push_back(cor7_check(DiskPoint(am), DiskPoint(0.9), sp, r, t));
            b.bracket(d, verify_detail::spread(ratios), 0.0, kBoundedFactor, true,
                      "values " + fmt(ratios.front()) + " .. " + fmt(ratios.back()));
        });
    }
    {
        const std::string d = "weighted kernel integral at a=b=0 equals 1/(s+1)";
        b.guarded(d, [&] {
            double v = cor7_check(DiskPoint(0.0), DiskPoint(0.0), sp, 1.6, 2.0);
            b.bracket(d, verify_detail::rel_diff(v, 1.0 / (sp + 1.0)), 0.0, 1e-10);
        });
    }
    return b.finish(t0);
}

inline SuiteReport suite_lemma8() {
    auto t0 = std::chrono::steady_clock::now();
    verify_detail::Builder b("lemma8");
    const std::vector<SpaceParams> grid{SpaceParams(2, 1, 1), SpaceParams(2, 1, 0.5), SpaceParams(1, 2, 0.5),
                                        SpaceParams(0.5, 3, 0.8)};
    const std::vector<double> radii{0.0, 0.5, 0.9, 0.99, 0.999};
    for (const auto& P : grid) {
        std::vector<ConstantReport> reps(radii.size());
        std::string err;
        try {
            for (std::size_t i = 0; i < radii.size(); ++i)
                reps[i] = fps_seminorm(deriv(lemma_eight(DiskPoint(radii[i]), P.alpha)), P);
        } catch (const std::exception& e) {
            err = e.what();
        }
        for (std::size_t i = 0; i < radii.size() && err.empty(); ++i)
            b.bracket("||f_{b,alpha}|| in F(p,p alpha-2,s), " + verify_detail::params_str(P) +
                          ", |b|=" + verify_detail::fmt(radii[i]),
                      reps[i].value, 0.0, kHuge, reps[i].converged);
        const std::string d = "plateau value(|b|=0.999)/value(|b|=0.9), " + verify_detail::params_str(P);
        if (!err.empty()) {
            b.guarded(d, [&] { throw std::runtime_error(err); });
            continue;
        }
        b.bracket(d, reps[4].value / reps[2].value, 0.0, 2.0, reps[4].converged && reps[2].converged);
    }
    return b.finish(t0);
}

inline SuiteReport suite_mobius_invariance() {
    auto t0 = std::chrono::steady_clock::now();
    verify_detail::Builder b("mobius_invariance");
    const SpaceParams P(2, 1, 1);
    const std::vector<std::pair<std::string, AnalyticFunction>> fs{{"z", identity()},
                                                                   {"z^2+z", polynomial({0.0, 1.0, 1.0})}};
    const std::vector<cplx> as{0.3, 0.6, 0.9, std::polar(0.9, 2.0)};
    for (const auto& [name, f] : fs) {
        ConstantReport base;
        b.guarded("seminorm of " + name, [&] { base = fps_seminorm(deriv(f), P); });
        for (cplx a : as) {
            const std::string d = "|seminorm(f o phi_a)/seminorm(f) - 1|, f=" + name + ", a=" + verify_detail::fmt(a);
            b.guarded(d, [&] {
                auto c = fps_seminorm(compose_mobius(f, DiskPoint(a)), P);
                b.bracket(d, std::abs(c.value / base.value - 1.0), 0.0, 0.005, c.converged && base.converged);
            });
        }
    }
    return b.finish(t0);
}

inline SuiteReport suite_theorem2() {
    auto t0 = std::chrono::steady_clock::now();
    verify_detail::Builder b("theorem2");
    const double p = 2.0, s = 1.5;
    const SpaceParams P(p, 1.0, s);
    const int depth = 10;
    {
        const std::string d = "embedding ratios, logpower(sigma=s,tau=p), standard battery: max/median";
        b.guarded(d, [&] {
            auto rep = embedding_ratio(standard_battery(1.0), log_power_density(s, p), P, depth);
            bool conv = true;
            for (const auto& e : rep.entries) conv = conv && e.converged;
            b.bracket(d, rep.max_ratio / rep.median_ratio, 0.0, kBoundedFactor, conv,
                      "max=" + verify_detail::fmt(rep.max_ratio) + " median=" + verify_detail::fmt(rep.median_ratio));
        });
    }
    {
        const std::string d = "embedding ratio with log(2/(1-conj(b)z)), |b|=1-2^-k, power(sigma=s), k=2..8";
        b.guarded(d, [&] {
            Battery bat;
            for (int k = 2; k <= 8; ++k)
                bat.push_back({"log(1-2^-" + std::to_string(k) + ")", log_kernel(DiskPoint(1.0 - std::ldexp(1.0, -k)))});
            auto rep = embedding_ratio(bat, power_density(s), P, depth);
            std::vector<double> v;
            bool conv = true;
            for (const auto& e : rep.entries) {
                v.push_back(e.ratio);
                conv = conv && e.converged;
            }
            b.trend(d, "increasing", v, conv);
        });
    }
    return b.finish(t0);
}

inline SuiteReport suite_theorem13() {
    auto t0 = std::chrono::steady_clock::now();
    verify_detail::Builder b("theorem13");
    const SpaceParams P(2.0, 0.5, 1.5);
    const int depth = 10;
    const MeasureSpec mu = power_density(P.s);
    {
        const std::string d = "f=1: |tent norm^p - s-Carleson constant| (exact)";
        b.guarded(d, [&] {
            auto tn = tent_norm(constant(1.0), mu, P.p, P.s, depth);
            auto cc = carleson_constant(mu, P.s, depth);
            b.bracket(d, std::abs(tn.raw_value - cc.raw_value), 0.0, 0.0, tn.converged && cc.converged);
        });
    }
    {
        const std::string d = "embedding ratios, power(sigma=s), f_{b,alpha} battery |b| in {0,.5,.9,.99,.999}: max/median";
        b.guarded(d, [&] {
            Battery bat;
            for (double r : {0.0, 0.5, 0.9, 0.99, 0.999})
                bat.push_back({"lemma8(" + verify_detail::fmt(r) + ")", lemma_eight(DiskPoint(r), P.alpha)});
            auto rep = embedding_ratio(bat, mu, P, depth);
            bool conv = true;
            for (const auto& e : rep.entries) conv = conv && e.converged;
            b.bracket(d, rep.max_ratio / rep.median_ratio, 0.0, kBoundedFactor, conv,
                      "max=" + verify_detail::fmt(rep.max_ratio) + " median=" + verify_detail::fmt(rep.median_ratio));
        });
    }
    return b.finish(t0);
}

inline SuiteReport suite_theorem14() {
    auto t0 = std::chrono::steady_clock::now();
    verify_detail::Builder b("theorem14");
    const SpaceParams P(1.0, 2.0, 1.5);  // gamma = s + p(alpha-1) = 2.5
    const int depth = 10;
    Battery bat;
    for (int k = 2; k <= 8; ++k)
        bat.push_back({"(1-conj(b)z)^(1-alpha), |b|=1-2^-" + std::to_string(k),
                       power_kernel(DiskPoint(1.0 - std::ldexp(1.0, -k)), P.alpha - 1.0)});
    {
        const std::string d = "extracted constant with power(sigma=1.5) (wrong exponent), k=2..8";
        b.guarded(d, [&] {
            auto rep = embedding_ratio(bat, power_density(1.5), P, depth);
            std::vector<double> v;
            bool conv = true;
            for (const auto& e : rep.entries) {
                v.push_back(e.ratio);
                conv = conv && e.converged;
            }
            b.trend(d, "increasing", v, conv);
        });
    }
    {
        const std::string d = "extracted constant with power(sigma=s+p(alpha-1)=2.5), k=2..8: max/median";
        b.guarded(d, [&] {
            auto rep = embedding_ratio(bat, power_density(2.5), P, depth);
            bool conv = true;
            for (const auto& e : rep.entries) conv = conv && e.converged;
            b.bracket(d, rep.max_ratio / rep.median_ratio, 0.0, kBoundedFactor, conv,
                      "max=" + verify_detail::fmt(rep.max_ratio) + " median=" + verify_detail::fmt(rep.median_ratio));
        });
    }
    return b.finish(t0);
}

// I(a) = int |f - f(0)|^p |1 - conj(a) z|^-p (1-|z|^2)^gamma dA
inline QuadratureResult<double> lemma9_integral(const AnalyticFunction& f, cplx a, double p, double gamma,
                                                const QuadratureSpec& spec = {}) {
    const cplx f0 = f.eval(0.0), ac = std::conj(a);
    auto foci = f.foci();
    foci.push_back(a);
    std::vector<cplx> kinks;
    if (has_cone_points(p)) kinks = interior_zeros([&](cplx z) { return f.eval(z) - f0; });
    return integrate_disk(
        [&](cplx z) { return std::pow(std::abs(f.eval(z) - f0) / std::abs(1.0 - ac * z), p); }, gamma, spec, foci,
        kinks);
}

// J(a) = (1-|a|^2)^t int |f - f(a)|^p |1 - conj(a) z|^-(p+s+t) (1-|z|^2)^(s+p alpha-2) dA
inline QuadratureResult<double> prop10_integral(const AnalyticFunction& f, cplx a, const SpaceParams& P, double t,
                                                const QuadratureSpec& spec = {}) {
    const cplx fa = f.eval(a), ac = std::conj(a);
    auto foci = f.foci();
    foci.push_back(a);
    const double e = P.p + P.s + t;
    std::vector<cplx> kinks;
    if (has_cone_points(P.p)) kinks = interior_zeros([&](cplx z) { return f.eval(z) - fa; });
    auto r = integrate_disk(
        [&](cplx z) { return std::pow(std::abs(f.eval(z) - fa), P.p) * std::pow(std::norm(1.0 - ac * z), -0.5 * e); },
        P.s + P.p * P.alpha - 2.0, spec, foci, kinks);
    const double w = std::pow((1.0 - std::abs(a)) * (1.0 + std::abs(a)), t);
    r.value *= w;
    r.error_estimate *= w;
    return r;
}

inline std::vector<cplx> difference_quotient_grid() {
    std::vector<cplx> g{0.0};
    for (double r : {0.5, 0.9, 0.99})
        for (int j = 0; j < 4; ++j) g.push_back(std::polar(r, kTwoPi * j / 4.0));
    return g;
}

inline SuiteReport suite_lemma9_prop10() {
    auto t0 = std::chrono::steady_clock::now();
    verify_detail::Builder b("lemma9_prop10");
    const auto grid = difference_quotient_grid();
    for (auto [p, gamma] : {std::pair{2.0, 0.5}, std::pair{1.0, 0.5}}) {
        const std::string d = "sup_a I(a) / int |f'|^p (1-|z|^2)^gamma dA, (p,gamma)=(" + verify_detail::fmt(p) + "," +
                              verify_detail::fmt(gamma) + "), standard battery: max/median";
        b.guarded(d, [&] {
            const Battery bat = standard_battery(1.0);
            bool conv = true;
            std::vector<double> ratios;
            for (const auto& m : bat) {
                std::vector<cplx> kinks;
                if (has_cone_points(p)) kinks = interior_zeros([&](cplx z) { return m.f.deriv(z); });
                auto den = integrate_disk([&](cplx z) { return std::pow(std::abs(m.f.deriv(z)), p); }, gamma, {},
                                          m.f.foci(), kinks);
                auto vals = parallel_map<QuadratureResult<double>>(
                    grid.size(), [&](std::size_t i) { return lemma9_integral(m.f, grid[i], p, gamma); });
                double mx = 0.0;
                for (const auto& v : vals) {
                    mx = std::max(mx, v.value);
                    conv = conv && v.converged;
                }
                conv = conv && den.converged;
                ratios.push_back(mx / den.value);
            }
            b.bracket(d, verify_detail::spread(ratios), 0.0, kBoundedFactor, conv);
        });
    }
    for (const SpaceParams& P : {SpaceParams(2, 1, 1), SpaceParams(2, 1.5, 0.5)}) {
        const double t = P.s + 2.0 * P.p * (P.alpha - 1.0);
        const std::string d = "sup_a J(a) / ||f||^p, t=s+2p(alpha-1), " + verify_detail::params_str(P) +
                              ", standard battery: max/median";
        b.guarded(d, [&] {
            const Battery bat = standard_battery(P.alpha);
            bool conv = true;
            std::vector<double> ratios;
            for (const auto& m : bat) {
                auto nf = fps_seminorm(deriv(m.f), P);
                auto vals = parallel_map<QuadratureResult<double>>(
                    grid.size(), [&](std::size_t i) { return prop10_integral(m.f, grid[i], P, t); });
                double mx = 0.0;
                for (const auto& v : vals) {
                    mx = std::max(mx, v.value);
                    conv = conv && v.converged;
                }
                conv = conv && nf.converged;
                ratios.push_back(mx / std::pow(nf.value, P.p));
            }
            b.bracket(d, verify_detail::spread(ratios), 0.0, kBoundedFactor, conv);
        });
    }
    return b.finish(t0);
}

inline SuiteReport suite_prop_pn() {
    auto t0 = std::chrono::steady_clock::now();
    verify_detail::Builder b("prop_pn");
    const double p = 2.0, s = 1.5;
    const int depth = 12;
    const std::vector<double> rs{0.5, 0.9, 0.99, 0.999};
    // tau = p + 1 is a vanishing witness; tau = p is log-Carleson but not vanishing, so
    // restriction can only keep its constant level
    for (auto [tau, kind] : {std::pair{p + 1.0, "nonincreasing, final < first"}, std::pair{p, "nonincreasing"}}) {
        const std::string d = "log-Carleson constant of logpower(sigma=s,tau=" + verify_detail::fmt(tau) +
                              ") restricted to |z|>r, r in {.5,.9,.99,.999}, (p,s)=(2,1.5)";
        b.guarded(d, [&] {
            const MeasureSpec mu = log_power_density(s, tau);
            std::vector<double> v;
            bool conv = true;
            for (double r : rs) {
                auto c = log_carleson_constant(restrict(mu, r), p, s, depth);
                v.push_back(c.value);
                conv = conv && c.converged;
            }
            b.trend(d, kind, v, conv);
        });
    }
    return b.finish(t0);
}

inline SuiteReport suite_theorem17_20() {
    auto t0 = std::chrono::steady_clock::now();
    verify_detail::Builder b("theorem17_20");
    using verify_detail::fmt;
    const SpaceParams P(2.0, 1.0, 1.0);
    const int depth = 10;
    const Battery bat = standard_battery(1.0);

    b.guarded("J_g with g=log(0.9)", [&] {
        auto rep = operator_boundedness_report(log_kernel(DiskPoint(0.9)), P, OperatorKind::Jg, bat, depth);
        b.bracket("J_g, g=log(0.9): " + rep.panel1_label, rep.panel1.value, 1e-12, kHuge, rep.panel1.converged);
        b.bracket("J_g, g=log(0.9): " + rep.panel2_label, rep.panel2.value, 1e-12, kHuge, rep.panel2.converged);
        b.bracket("J_g, g=log(0.9): battery ratio max/median", rep.max_ratio / rep.median_ratio, 0.0, kBoundedFactor,
                  true, "max=" + fmt(rep.max_ratio));
    });

    const cplx c(0.6, -0.8);  // |c| = 1
    b.guarded("J_g with constant g", [&] {
        auto rep = operator_boundedness_report(constant(c), P, OperatorKind::Jg, bat, depth);
        b.bracket("J_g, g constant: max battery ratio (g'=0)", rep.max_ratio, 0.0, 0.0);
    });
    b.guarded("I_g with constant g", [&] {
        auto rep = operator_boundedness_report(constant(c), P, OperatorKind::Ig, bat, depth);
        double dev = 0.0, over = 0.0;
        for (std::size_t i = 0; i < bat.size(); ++i) {
            over = std::max(over, rep.entries[i].ratio / std::abs(c));
            if (std::abs(bat[i].f.eval(0.0)) == 0.0) dev = std::max(dev, std::abs(rep.entries[i].ratio / std::abs(c) - 1.0));
        }
        b.bracket("I_g, g constant: |ratio/|c| - 1| over members with f(0)=0", dev, 0.0, 1e-9);
        b.bracket("I_g, g constant: max ratio/|c|", over, 0.0, 1.0 + 1e-9);
    });
    b.guarded("I_g with g=log(0.9)", [&] {
        auto rep = operator_boundedness_report(log_kernel(DiskPoint(0.9)), P, OperatorKind::Ig, bat, depth);
        b.bracket("I_g, g=log(0.9): max battery ratio / ||g||_inf", rep.max_ratio / rep.panel1.value, 0.0, 1.05, true,
                  "hinf=" + fmt(rep.panel1.value));
    });

    // M_g with g = (1 - conj(b) z)^-0.3 near the boundary, tested on psi_a along b's ray
    const AnalyticFunction g = power_kernel(DiskPoint(0.999), 0.3);
    const std::vector<double> radii{0.9, 0.95, 0.99};
    b.guarded("M_g necessity", [&] {
        std::vector<double> ratios, lower;
        for (double r : radii) {
            const BatteryMember m{"psi(" + fmt(r) + ")", psi_family(DiskPoint(r), P.alpha)};
            ratios.push_back(operator_ratio(OperatorKind::Mg, m, g, P, {}, {}).ratio);
            const double bl = bloch_norm(mg_deriv(m.f, g), P.alpha).value;
            lower.push_back(bl / (r * std::abs(g.eval(r))));
        }
        b.trend("M_g ratio ||M_g psi_a||/||psi_a||, g=(1-0.999z)^-0.3, |a| in {.9,.95,.99}", "increasing", ratios);
        double mn = kHuge;
        for (double x : lower) mn = std::min(mn, x);
        b.bracket("Bloch norm of M_g psi_a / (|a||g(a)|), |a| in {.9,.95,.99}: min", mn, 1.0 - 1e-9, kHuge);
    });
    return b.finish(t0);
}

inline SuiteReport suite_operator_algebra() {
    auto t0 = std::chrono::steady_clock::now();
    verify_detail::Builder b("operator_algebra");
    std::mt19937_64 rng(7);
    double decomp = 0, jgc = 0, igc = 0, mgc = 0, lin = 0;
    for (int trial = 0; trial < 64; ++trial) {
        const AnalyticFunction f = polynomial(verify_detail::random_poly(rng, 16));
        const AnalyticFunction g = polynomial(verify_detail::random_poly(rng, 16));
        const AnalyticFunction h = polynomial(verify_detail::random_poly(rng, 16));
        const AnalyticFunction jp = jg_poly(f, g), ip = ig_poly(f, g), mp = mg_poly(f, g);
        const auto jf = jg_deriv(f, g), iff = ig_deriv(f, g), mf = mg_deriv(f, g);
        const cplx lam(0.3, -1.2);
        const auto lf = jg_deriv(sum({f, scaled(lam, h)}), g), jh = jg_deriv(h, g);
        for (cplx z : verify_detail::random_disk_points(rng, 64, 0.999)) {
            const cplx m = mf(z);
            const double scale = std::max(1.0, std::abs(m));
            decomp = std::max(decomp, std::abs(m - (iff(z) + jf(z))) / scale);
            jgc = std::max(jgc, std::abs(jp.deriv(z) - jf(z)) / std::max(1.0, std::abs(jf(z))));
            igc = std::max(igc, std::abs(ip.deriv(z) - iff(z)) / std::max(1.0, std::abs(iff(z))));
            mgc = std::max(mgc, std::abs(mp.deriv(z) - m) / scale);
            const cplx want = jf(z) + lam * jh(z);
            lin = std::max(lin, std::abs(lf(z) - want) / std::max(1.0, std::abs(want)));
        }
    }
    b.bracket("M_g field = I_g field + J_g field (rel.), 64 random polynomial pairs x 64 points", decomp, 0.0, 1e-10);
    b.bracket("J_g coefficient form vs pointwise field (rel.)", jgc, 0.0, 1e-10);
    b.bracket("I_g coefficient form vs pointwise field (rel.)", igc, 0.0, 1e-10);
    b.bracket("M_g coefficient form vs pointwise field (rel.)", mgc, 0.0, 1e-10);
    b.bracket("J_g linear in f at the field level (rel.)", lin, 0.0, 1e-10);
    {
        const AnalyticFunction f = identity(), g = monomial(2);
        const auto c = poly_coeffs(jg_poly(f, g));
        const double err = c.size() == 4 ? std::abs(c[3] - 2.0 / 3.0) + std::abs(c[0]) + std::abs(c[1]) + std::abs(c[2])
                                         : kHuge;
        b.bracket("J_g f = (2/3) z^3 for f=z, g=z^2 (coefficient error)", err, 0.0, 1e-15);
    }
    {
        double mx = 0.0;
        for (cplx a : {cplx(0.5), cplx(0.0, -0.9), std::polar(0.99, 1.0)}) {
            const AnalyticFunction psi = psi_family(DiskPoint(a), 1.0);
            const AnalyticFunction g = polynomial({1.0, cplx(0.0, 2.0), -0.5});
            const cplx lhs = mg_deriv(psi, g)(a), rhs = g.eval(a) * psi.deriv(a);
            mx = std::max(mx, std::abs(lhs - rhs) / std::abs(rhs));
        }
        b.bracket("M_g psi_a field at a equals g(a) psi_a'(a) (rel.)", mx, 0.0, 1e-12);
    }
    return b.finish(t0);
}

// ---- registry -------------------------------------------------------------------------

struct SuiteEntry {
    const char* id;
    SuiteReport (*run)();
};

inline const std::vector<SuiteEntry>& suite_registry() {
    static const std::vector<SuiteEntry> reg{
        {"quadrature_closed_form", suite_quadrature_closed_form},
        {"geometry", suite_geometry},
        {"area_carleson", suite_area_carleson},
        {"lemma4b", suite_lemma4b},
        {"prop16", suite_prop16},
        {"lemma6_cor7", suite_lemma6_cor7},
        {"lemma8", suite_lemma8},
        {"mobius_invariance", suite_mobius_invariance},
        {"lemma9_prop10", suite_lemma9_prop10},
        {"prop_pn", suite_prop_pn},
        {"theorem2", suite_theorem2},
        {"theorem13", suite_theorem13},
        {"theorem14", suite_theorem14},
        {"theorem17_20", suite_theorem17_20},
        {"operator_algebra", suite_operator_algebra},
    };
    return reg;
}

inline std::vector<std::string> suite_ids() {
    std::vector<std::string> ids;
    for (const auto& e : suite_registry()) ids.emplace_back(e.id);
    return ids;
}

inline SuiteReport run_suite(const std::string& id) {
    for (const auto& e : suite_registry())
        if (id == e.id) return e.run();
    std::string valid;
    for (const auto& e : suite_registry()) valid += std::string(valid.empty() ? "" : ", ") + e.id;
    throw std::invalid_argument("unknown suite '" + id + "'; valid: " + valid + ", all");
}

inline std::vector<SuiteReport> run_all() {
    std::vector<SuiteReport> out;
    for (const auto& e : suite_registry()) out.push_back(e.run());
    return out;
}

}  // namespace fpqs
