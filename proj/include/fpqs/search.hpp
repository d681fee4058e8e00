#pragma once
// Sup over Möbius centers a.  Three deterministic phases:
//   1. an r-lattice up to a coarse radius,
//   2. rays from the best lattice points toward the boundary, halving 1-|a| each step,
//   3. coordinate descent with hyperbolic steps (radial / tangential), step halving.
// Samples use a single quadrature level; the maximizer is re-evaluated with the full
// refinement to decide convergence.

#include "fpqs/disk.hpp"
#include "fpqs/parallel.hpp"
#include "fpqs/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fpqs {

struct SearchParams {
    double lattice_r = 0.4;
    double coarse_cap = 0.9;  // lattice radius
    double cap = 0.999;       // hard cap on |a|
    int rays = 3;
    int max_steps = 50;
    double min_step = 2e-3;   // hyperbolic step at which descent stops
};

using Maximizer = std::variant<std::monostate, DiskPoint, Arc>;

struct ConstantReport {
    double value = 0.0;      // in the units of the functional (p-th root taken for norms)
    double raw_value = 0.0;  // the supremum itself
    Maximizer maximizer;
    long samples_evaluated = 0;
    bool converged = true;
    double error_estimate = 0.0;
    int depth = -1;          // dyadic depth used, when arcs are searched
    std::vector<std::pair<double, double>> profile;  // (|a| or k, value)
    std::string note;
};

using Objective = std::function<QuadratureResult<double>(cplx, const QuadratureSpec&)>;

inline const std::vector<DiskPoint>& cached_lattice(double r, double cap) {
    static std::mutex mtx;
    static std::map<std::pair<double, double>, std::unique_ptr<std::vector<DiskPoint>>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[{r, cap}];
    if (!slot) slot = std::make_unique<std::vector<DiskPoint>>(build_r_lattice(r, cap));
    return *slot;
}

namespace detail {

inline cplx clamp_radius(cplx a, double cap) {
    double m = std::abs(a);
    return m > cap ? a * (cap / m) : a;
}

// Hyperbolic translate of a by step h in direction dir (unit complex, relative frame).
inline cplx hyperbolic_step(cplx a, cplx dir, double h) {
    cplx w = std::tanh(h) * dir;
    return (a + w) / (1.0 + std::conj(a) * w);
}

struct SampleLog {
    std::vector<std::pair<double, double>> entries;  // (|a|, value)
    void add(cplx a, double v) { entries.emplace_back(std::abs(a), v); }
    // Per-radius maxima, sorted by radius.
    std::vector<std::pair<double, double>> profile() const {
        std::map<double, double> m;
        for (auto [r, v] : entries) {
            auto it = m.find(r);
            if (it == m.end() || v > it->second) m[r] = v;
        }
        return {m.begin(), m.end()};
    }
};

}  // namespace detail

// Local hyperbolic coordinate ascent from `start` (value `v0`) of a cheap objective.
template <class Eval>
std::pair<cplx, double> hyperbolic_ascent(cplx start, double v0, Eval&& eval, double cap, double h0, int max_steps,
                                          double min_step, long& samples) {
    cplx a = start;
    double v = v0;
    double h = h0;
    for (int step = 0; step < max_steps && h >= min_step; ++step) {
        const double m = std::abs(a);
        const cplx d = m > 0.0 ? a / m : cplx(1.0, 0.0);
        const cplx dirs[4] = {d, cplx(0.0, 1.0) * d, -d, cplx(0.0, -1.0) * d};
        std::vector<cplx> cand(4);
        for (int i = 0; i < 4; ++i) cand[i] = detail::clamp_radius(detail::hyperbolic_step(a, dirs[i], h), cap);
        auto vals = parallel_map<double>(4, [&](std::size_t i) { return eval(cand[i]); });
        samples += 4;
        int best = -1;
        double bv = v;
        for (int i = 0; i < 4; ++i)
            if (vals[i] > bv) {
                bv = vals[i];
                best = i;
            }
        if (best >= 0) {
            a = cand[best];
            v = bv;
        } else {
            h *= 0.5;
        }
    }
    return {a, v};
}

// sup_a objective(a), |a| <= cap.  raw_value is the sup; value is left equal to it.
inline ConstantReport search_sup(const Objective& obj, const SearchParams& sp, const QuadratureSpec& spec) {
    spec.validate();
    const QuadratureSpec quick = spec.single_level();
    ConstantReport rep;
    detail::SampleLog log;
    auto eval = [&](cplx a) { return obj(a, quick).value; };

    const auto& lattice = cached_lattice(sp.lattice_r, std::min(sp.coarse_cap, sp.cap));
    auto lv = parallel_map<double>(lattice.size(), [&](std::size_t i) { return eval(lattice[i]); });
    rep.samples_evaluated += long(lattice.size());
    cplx best = lattice[0];
    double bv = lv[0];
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        log.add(lattice[i], lv[i]);
        if (lv[i] > bv) {
            bv = lv[i];
            best = lattice[i];
        }
    }

    // rays from the top lattice points
    std::vector<std::size_t> order(lattice.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return lv[i] > lv[j]; });
    std::vector<cplx> ray_pts;
    for (int k = 0; k < sp.rays && k < int(order.size()); ++k) {
        cplx a0 = lattice[order[k]];
        double m = std::abs(a0);
        if (m == 0.0) continue;
        for (int j = 1;; ++j) {
            double rho = 1.0 - (1.0 - m) * std::ldexp(1.0, -j);
            if (rho >= sp.cap) {
                ray_pts.push_back(a0 * (sp.cap / m));
                break;
            }
            ray_pts.push_back(a0 * (rho / m));
        }
    }
    auto rv = parallel_map<double>(ray_pts.size(), [&](std::size_t i) { return eval(ray_pts[i]); });
    rep.samples_evaluated += long(ray_pts.size());
    for (std::size_t i = 0; i < ray_pts.size(); ++i) {
        log.add(ray_pts[i], rv[i]);
        if (rv[i] > bv) {
            bv = rv[i];
            best = ray_pts[i];
        }
    }

    // descent, logging every sample
    long steps = 0;
    std::vector<std::pair<cplx, double>> descent_log;
    std::mutex log_mtx;
    auto eval_logged = [&](cplx a) {
        double v = eval(a);
        std::lock_guard<std::mutex> g(log_mtx);
        descent_log.emplace_back(a, v);
        return v;
    };
    auto [a_star, v_star] =
        hyperbolic_ascent(best, bv, eval_logged, sp.cap, 0.5 * sp.lattice_r, sp.max_steps, sp.min_step, steps);
    rep.samples_evaluated += steps;
    // log order may depend on scheduling; the profile is a per-radius max, so it does not
    std::sort(descent_log.begin(), descent_log.end(), [](const auto& x, const auto& y) {
        if (x.first.real() != y.first.real()) return x.first.real() < y.first.real();
        if (x.first.imag() != y.first.imag()) return x.first.imag() < y.first.imag();
        return x.second < y.second;
    });
    for (auto& [a, v] : descent_log) log.add(a, v);

    rep.raw_value = v_star;
    rep.value = v_star;
    rep.maximizer = DiskPoint(a_star);
    auto refined = obj(a_star, spec);
    rep.samples_evaluated += 1;
    rep.error_estimate = std::abs(refined.value - v_star);
    rep.converged = refined.converged && rep.error_estimate <= spec.rel_tol * std::abs(v_star) + 1e-14;
    if (!std::isfinite(v_star)) rep.converged = false;
    rep.profile = log.profile();
    return rep;
}

// Converts the report of a p-th power functional to norm units.
inline ConstantReport take_root(ConstantReport r, double p) {
    if (p != 1.0) {
        r.value = r.raw_value > 0.0 ? std::pow(r.raw_value, 1.0 / p) : 0.0;
        for (auto& e : r.profile) e.second = e.second > 0.0 ? std::pow(e.second, 1.0 / p) : 0.0;
    }
    return r;
}

}  // namespace fpqs
