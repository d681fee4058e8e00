#pragma once
// Norm and seminorm functionals: F(p,q,s), its logarithmic variant, Bloch-type,
// weighted Dirichlet, H^infinity, and the tent norm T^inf_{p,s}(mu) in box and kernel form.

#include "fpqs/disk.hpp"
#include "fpqs/funcspace.hpp"
#include "fpqs/measures.hpp"
#include "fpqs/parallel.hpp"
#include "fpqs/quadrature.hpp"
#include "fpqs/search.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace fpqs {

namespace detail {
// |w|^p computed from |w|^2
inline double abs_pow(cplx w, double p) {
    if (p == 2.0) return std::norm(w);
    if (p == 1.0) return std::abs(w);
    return std::pow(std::norm(w), 0.5 * p);
}
inline double log_weight(cplx a, double p) {
    if (p == 0.0) return 1.0;
    const double m = std::abs(a);
    return std::pow(std::log(2.0 / ((1.0 - m) * (1.0 + m))), p);
}
}  // namespace detail

// I(a) = int |f'|^p (1-|z|^2)^q (1-|phi_a(z)|^2)^s dA
inline Objective fps_objective(const DerivativeField& df, const SpaceParams& params, double log_power = 0.0) {
    const double p = params.p, q = params.q(), s = params.s;
    std::vector<cplx> kinks;
    if (has_cone_points(p)) kinks = interior_zeros(df.fn);
    return [df, p, q, s, log_power, kinks](cplx a, const QuadratureSpec& spec) {
        const cplx ac = std::conj(a);
        const double ma = (1.0 - std::abs(a)) * (1.0 + std::abs(a));
        const double pref = std::pow(ma, s) * detail::log_weight(a, log_power);
        Layout L = disk_layout(q + s);
        L.foci = df.foci;
        L.foci.push_back(a);
        L.kinks = kinks;
        auto f = [&](cplx z) { return detail::abs_pow(df(z), p) * std::pow(std::norm(1.0 - ac * z), -s); };
        auto r = integrate_graded(L, f, spec);
        r.value *= pref;
        r.error_estimate *= pref;
        return r;
    };
}

inline void check_fps_params(const SpaceParams& params) {
    if (!(params.s > 0.0)) throw std::invalid_argument("F(p,q,s) seminorm needs s > 0");
    if (!(params.q() + params.s > -1.0)) throw std::invalid_argument("F(p,q,s) seminorm needs q + s > -1");
}

// ||f||_{F(p,q,s)} with q = p alpha - 2: the p-th root of sup_a I(a).
inline ConstantReport fps_seminorm(const DerivativeField& df, const SpaceParams& params, const SearchParams& sp = {},
                                   const QuadratureSpec& spec = {}) {
    check_fps_params(params);
    return take_root(search_sup(fps_objective(df, params), sp, spec), params.p);
}

// sup_a (log 2/(1-|a|^2))^p I(a), p-th root.
inline ConstantReport logF_seminorm(const DerivativeField& df, const SpaceParams& params, const SearchParams& sp = {},
                                    const QuadratureSpec& spec = {}) {
    check_fps_params(params);
    return take_root(search_sup(fps_objective(df, params, params.p), sp, spec), params.p);
}

// |f(0)| + ||f||_{F(p, p alpha - 2, s)}
inline double full_norm(const AnalyticFunction& f, const SpaceParams& params, const SearchParams& sp = {},
                        const QuadratureSpec& spec = {}) {
    return std::abs(f.eval(0.0)) + fps_seminorm(deriv(f), params, sp, spec).value;
}

struct GridParams {
    int max_k = 14;       // radii 1 - 2^-k, k = 0..max_k
    int angles = 128;
    int max_steps = 50;   // local refinement
};

namespace detail {

inline std::vector<cplx> bloch_grid(const GridParams& g, const std::vector<cplx>& foci) {
    std::vector<cplx> pts;
    std::vector<double> extra_angles;
    for (cplx f : foci)
        if (std::abs(f) > 0.0) extra_angles.push_back(angle_fraction(f));
    for (int k = 0; k <= g.max_k; ++k) {
        const double r = 1.0 - std::ldexp(1.0, -k);
        if (r == 0.0) {
            pts.emplace_back(0.0, 0.0);
            continue;
        }
        for (int j = 0; j < g.angles; ++j) pts.push_back(std::polar(r, kTwoPi * j / g.angles));
        for (double t : extra_angles) pts.push_back(std::polar(r, kTwoPi * t));
    }
    for (cplx f : foci) pts.push_back(f);
    return pts;
}

// sup over the grid of a pointwise functional, then local ascent from the best point.
template <class F>
ConstantReport grid_sup(F&& f, const GridParams& g, const std::vector<cplx>& foci, double cap) {
    ConstantReport rep;
    auto pts = bloch_grid(g, foci);
    auto vals = parallel_map<double>(pts.size(), [&](std::size_t i) { return f(pts[i]); });
    std::size_t bi = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (vals[i] > vals[bi]) bi = i;
    rep.samples_evaluated = long(pts.size());
    std::map<double, double> prof;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double r = std::abs(pts[i]);
        auto it = prof.find(r);
        if (it == prof.end() || vals[i] > it->second) prof[r] = vals[i];
    }
    long steps = 0;
    auto [a, v] = hyperbolic_ascent(pts[bi], vals[bi], f, cap, 0.25, g.max_steps, 1e-6, steps);
    rep.samples_evaluated += steps;
    rep.value = rep.raw_value = v;
    rep.maximizer = DiskPoint(a);
    rep.profile.assign(prof.begin(), prof.end());
    rep.converged = std::isfinite(v);
    return rep;
}

}  // namespace detail

// sup |f'(z)| (1-|z|^2)^alpha
inline ConstantReport bloch_norm(const DerivativeField& df, double alpha, const GridParams& g = {}) {
    if (!(alpha > 0.0)) throw std::invalid_argument("bloch_norm: alpha must be > 0");
    auto f = [&](cplx z) {
        const double m = std::abs(z);
        return std::abs(df(z)) * std::pow((1.0 - m) * (1.0 + m), alpha);
    };
    return detail::grid_sup(f, g, df.foci, 1.0 - std::ldexp(1.0, -g.max_k));
}

inline double bloch_full_norm(const AnalyticFunction& f, double alpha, const GridParams& g = {}) {
    return std::abs(f.eval(0.0)) + bloch_norm(deriv(f), alpha, g).value;
}

// sup |f| on the grid; polynomials additionally scan |z| = 0.999.
inline ConstantReport hinf_norm(const AnalyticFunction& f, const GridParams& g = {}) {
    auto absf = [&](cplx z) { return std::abs(f.eval(z)); };
    ConstantReport rep = detail::grid_sup(absf, g, f.foci(), 1.0 - std::ldexp(1.0, -g.max_k));
    if (std::holds_alternative<fn::Polynomial>(f.variant())) {
        const int n = 4096;
        auto vals = parallel_map<double>(n, [&](std::size_t j) { return absf(std::polar(0.999, kTwoPi * j / n)); });
        std::size_t bj = 0;
        for (std::size_t j = 1; j < vals.size(); ++j)
            if (vals[j] > vals[bj]) bj = j;
        rep.samples_evaluated += n;
        rep.note = "circle |z|=0.999 max " + std::to_string(vals[bj]);
        if (vals[bj] > rep.value) {
            rep.value = rep.raw_value = vals[bj];
            rep.maximizer = DiskPoint(std::polar(0.999, kTwoPi * double(bj) / n));
        }
    }
    return rep;
}

// |f(0)| + ((gamma+1) int |f'|^p (1-|z|^2)^gamma dA)^(1/p)
inline double dirichlet_norm(const AnalyticFunction& f, double p, double gamma, const QuadratureSpec& spec = {}) {
    if (!(gamma > -1.0)) throw std::invalid_argument("dirichlet_norm: gamma must be > -1");
    if (!(p > 0.0)) throw std::invalid_argument("dirichlet_norm: p must be > 0");
    std::vector<cplx> kinks;
    if (has_cone_points(p)) kinks = interior_zeros([&f](cplx z) { return f.deriv(z); });
    auto r = integrate_disk([&](cplx z) { return detail::abs_pow(f.deriv(z), p); }, gamma, spec, f.foci(), kinks);
    return std::abs(f.eval(0.0)) + std::pow((gamma + 1.0) * r.value, 1.0 / p);
}

// ---- arc sups (shared by tent norms and Carleson constants) --------------------

// sup over dyadic arcs of |I|^-s (log 2/|I|)^p_log int_{S(I)} F dmu.  Every caller
// that passes the same (form, F, foci, spec) gets bit-identical per-arc values.
template <class F>
ConstantReport arc_sup(const MeasureForm& form, F&& integrand, double p_log, double s, int depth,
                       const QuadratureSpec& spec, const std::vector<cplx>& foci = {},
                       const std::vector<cplx>& kinks = {}) {
    if (!(s >= 0.0)) throw std::invalid_argument("arc sup: s must be >= 0");
    if (!(p_log >= 0.0)) throw std::invalid_argument("arc sup: p must be >= 0");
    spec.validate();
    const auto arcs = dyadic_arcs(depth);
    const QuadratureSpec quick = spec.single_level();
    auto per_arc = [&](const Arc& I, const QuadratureSpec& qs) {
        auto r = integrate_measure(form, integrand, Region::of(CarlesonBox{I}), 0.0, qs, foci, kinks);
        const double w = std::pow(I.length, -s) * std::pow(std::log(2.0 / I.length), p_log);
        r.value *= w;
        r.error_estimate *= w;
        return r;
    };
    auto vals = parallel_map<double>(arcs.size(), [&](std::size_t i) { return per_arc(arcs[i], quick).value; });
    ConstantReport rep;
    rep.depth = depth;
    rep.samples_evaluated = long(arcs.size());
    std::size_t bi = 0;
    std::vector<double> level(depth + 1, 0.0);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (vals[i] > vals[bi]) bi = i;
        int k = arc_depth(arcs[i]);
        level[k] = std::max(level[k], vals[i]);
    }
    for (int k = 0; k <= depth; ++k) rep.profile.emplace_back(double(k), level[k]);
    rep.raw_value = rep.value = vals[bi];
    rep.maximizer = arcs[bi];
    if (spec.refinement_levels > 1) {
        auto refined = per_arc(arcs[bi], spec);
        rep.samples_evaluated += 1;
        rep.error_estimate = std::abs(refined.value - vals[bi]);
        rep.converged = refined.converged && rep.error_estimate <= spec.rel_tol * std::abs(vals[bi]) + 1e-14;
    } else {
        rep.converged = false;
    }
    if (!std::isfinite(rep.value)) rep.converged = false;
    return rep;
}

namespace detail {
inline auto p_power_integrand(const AnalyticFunction& f, double p) {
    return [&f, p](cplx z) { return p == 2.0 ? std::norm(f.eval(z)) : std::pow(std::abs(f.eval(z)), p); };
}
}  // namespace detail

// ||f||_{T^inf_{p,s}(mu)} = (sup_I |I|^-s int_{S(I)} |f|^p dmu)^(1/p)
inline ConstantReport tent_norm(const AnalyticFunction& f, const MeasureSpec& mu, double p, double s, int depth,
                                const QuadratureSpec& spec = {}) {
    if (!(p > 0.0)) throw std::invalid_argument("tent_norm: p must be > 0");
    std::vector<cplx> kinks;
    if (has_cone_points(p)) kinks = interior_zeros([&f](cplx z) { return f.eval(z); });
    return take_root(
        arc_sup(normal_form(mu), detail::p_power_integrand(f, p), 0.0, s, depth, spec, f.foci(), kinks), p);
}

// sup_a int (1-|a|^2)^t |1-conj(a) z|^-(s+t) |f|^p dmu, p-th root.
inline Objective kernel_objective(const MeasureSpec& mu, const AnalyticFunction& f, double p, double s, double t,
                                  double log_power) {
    auto form = std::make_shared<const MeasureForm>(normal_form(mu));
    auto fp = std::make_shared<const AnalyticFunction>(f);
    std::vector<cplx> kinks;
    if (has_cone_points(p)) kinks = interior_zeros([fp](cplx z) { return fp->eval(z); });
    return [form, fp, p, s, t, log_power, kinks](cplx a, const QuadratureSpec& spec) {
        const cplx ac = std::conj(a);
        const double ma = (1.0 - std::abs(a)) * (1.0 + std::abs(a));
        const double pref = std::pow(ma, t) * detail::log_weight(a, log_power);
        auto foci = fp->foci();
        foci.push_back(a);
        const AnalyticFunction& fr = *fp;
        auto g = [&](cplx z) {
            double v = std::pow(std::norm(1.0 - ac * z), -0.5 * (s + t));
            if (p != 0.0) v *= (p == 2.0 ? std::norm(fr.eval(z)) : std::pow(std::abs(fr.eval(z)), p));
            return v;
        };
        auto r = integrate_measure(*form, g, Region::disk(), 0.0, spec, foci, kinks);
        r.value *= pref;
        r.error_estimate *= pref;
        return r;
    };
}

inline ConstantReport tent_norm_kernel_form(const AnalyticFunction& f, const MeasureSpec& mu, double p, double s,
                                            double t, const SearchParams& sp = {}, const QuadratureSpec& spec = {}) {
    if (!(s > 0.0 && t > 0.0)) throw std::invalid_argument("tent_norm_kernel_form: need s, t > 0");
    if (!(p > 0.0)) throw std::invalid_argument("tent_norm_kernel_form: p must be > 0");
    return take_root(search_sup(kernel_objective(mu, f, p, s, t, 0.0), sp, spec), p);
}

}  // namespace fpqs
