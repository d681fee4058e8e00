#pragma once
// Weighted integration over the disk and over Carleson boxes with respect to
// (1-|z|^2)^q dA, dA normalized.  With u = 1-|z|^2 and t = arg z / 2pi one has
// dA = du dt, so every rule here is a product rule in (u, t).
//
// Two rule families:
//  * plain:  Gauss-Jacobi in u (weight u^q absorbed) x trapezoid in t; used for
//            integrands with no known near-singularities.
//  * graded: composite Gauss rules with panels refined geometrically toward u = 0
//            and toward the angles of "foci" -- interior points near which the
//            integrand has a kernel singularity just outside the disk (1/conj(a)).
//            The first radial panel absorbs u^q, panels touching an angular cusp
//            absorb |t - t_c|^-gamma.
// Refinement levels raise the node count; the error estimate is the difference
// between the last two levels.

#include "fpqs/disk.hpp"
#include "fpqs/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace fpqs {

struct QuadratureSpec {
    int radial_nodes = 128;
    int angular_nodes = 256;
    int refinement_levels = 3;
    double rel_tol = 1e-7;
    int panel_nodes = 8;   // graded rule: Gauss points per panel at the first level
    int min_grading = 3;   // graded rule: minimum number of geometric radial panels

    void validate() const {
        if (radial_nodes < 8) throw std::invalid_argument("QuadratureSpec: radial_nodes must be >= 8");
        if (angular_nodes < 16) throw std::invalid_argument("QuadratureSpec: angular_nodes must be >= 16");
        if (refinement_levels < 1) throw std::invalid_argument("QuadratureSpec: refinement_levels must be >= 1");
        if (!(rel_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: rel_tol must be > 0");
        if (panel_nodes < 2) throw std::invalid_argument("QuadratureSpec: panel_nodes must be >= 2");
        if (min_grading < 0) throw std::invalid_argument("QuadratureSpec: min_grading must be >= 0");
    }
    QuadratureSpec single_level() const {
        QuadratureSpec s = *this;
        s.refinement_levels = 1;
        return s;
    }
};

template <class T>
struct QuadratureResult {
    T value{};
    double error_estimate = 0.0;
    long nodes_used = 0;
    bool converged = false;
};

struct Node {
    cplx z;
    double u;  // 1 - |z|^2, kept exact near the boundary
    double w;
};
using NodeSet = std::vector<Node>;

// Angular weight (2 d(t, angle))^-exponent, d the circular distance in fractions.
struct Cusp {
    double angle = 0.0;
    double exponent = 0.0;  // in [0,1)
};

struct Layout {
    double q = 0.0;           // radial weight u^q, q > -1
    double u_hi = 1.0;        // u ranges over (0, u_hi]
    bool full_circle = true;
    double t_lo = 0.0;        // angular range when !full_circle (may extend below 0)
    double t_hi = 1.0;
    std::vector<cplx> foci;
    std::optional<Cusp> cusp;
    int extra_radial = 0;     // additional geometric radial panels (log-type weights)
    bool log_tail = false;    // integrand carries a power of log(1/u): exponential map on the first panel
    std::vector<cplx> kinks;  // interior cone points (zeros of w in |w|^p), graded in u and t
};

inline Layout disk_layout(double q) {
    Layout l;
    l.q = q;
    return l;
}

inline Layout box_layout(const CarlesonBox& box, double q) {
    Layout l;
    l.q = q;
    l.u_hi = box.u_max();
    l.full_circle = false;
    l.t_lo = box.arc.lo();
    l.t_hi = box.arc.hi();
    return l;
}

// Deterministic pairwise sum.
template <class T>
T pairwise_sum(const T* v, std::size_t n) {
    if (n <= 32) {
        T acc{};
        for (std::size_t i = 0; i < n; ++i) acc += v[i];
        return acc;
    }
    std::size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

// Integrands are called either as f(z) or as f(z, u) with u = 1 - |z|^2.
template <class F>
decltype(auto) call_integrand(F& f, cplx z, double u) {
    if constexpr (std::is_invocable_v<F&, cplx, double>)
        return f(z, u);
    else
        return f(z);
}

template <class F, class = void>
struct result_of_integrand {
    using type = decltype(std::declval<F&>()(cplx{}) * 1.0);
};
template <class F>
struct result_of_integrand<F, std::enable_if_t<std::is_invocable_v<F&, cplx, double>>> {
    using type = decltype(std::declval<F&>()(cplx{}, 0.0) * 1.0);
};
template <class F>
using integral_t = typename result_of_integrand<std::remove_reference_t<F>>::type;

template <class F>
auto integrate_nodes(const NodeSet& nodes, F&& f) {
    using T = integral_t<F>;
    std::vector<T> terms(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) terms[i] = nodes[i].w * call_integrand(f, nodes[i].z, nodes[i].u);
    return pairwise_sum(terms.data(), terms.size());
}

namespace detail {

struct Point1 {
    double x, w;
};

inline void sort_unique(std::vector<double>& v, double tol) {
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v)
        if (out.empty() || x - out.back() > tol) out.push_back(x);
    v.swap(out);
}

inline double focus_gap(cplx f) { return 1.0 - std::abs(f); }

// A focus sitting over the cusp angle makes a corner singularity; both gradings go deeper.
inline bool focus_on_cusp(const Layout& L, cplx f) {
    if (!L.cusp || std::abs(f) == 0.0) return false;
    return circular_distance(angle_fraction(f), L.cusp->angle) <= 2.0 * focus_gap(f);
}
inline bool any_focus_on_cusp(const Layout& L) {
    for (cplx f : L.foci)
        if (focus_on_cusp(L, f)) return true;
    return false;
}

// Radial foci relevant to the angular window of the layout.
inline double radial_scale(const Layout& L) {
    double delta = 1.0;
    for (cplx f : L.foci) {
        double m = std::abs(f);
        if (!L.full_circle) {
            double len = L.t_hi - L.t_lo;
            if (len < 1.0) {
                double c = 0.5 * (L.t_lo + L.t_hi);
                if (m == 0.0 || circular_distance(angle_fraction(f), c) > 1.5 * len + (1.0 - m)) continue;
            }
        }
        delta = std::min(delta, 1.0 - m * m);
    }
    return delta;
}

// Geometric breakpoints c +- w 2^-j, j = 0..levels-1, inside (lo, hi).
inline void add_graded_around(std::vector<double>& bp, double c, double w, int levels, double lo, double hi) {
    for (int j = 0; j < levels; ++j, w *= 0.5) {
        if (c - w > lo && c - w < hi) bp.push_back(c - w);
        if (c + w > lo && c + w < hi) bp.push_back(c + w);
    }
    if (c > lo && c < hi) bp.push_back(c);
}

constexpr int kKinkLevels = 14;

inline std::vector<Point1> radial_points(const Layout& L, int n, int min_grading) {
    const double U = L.u_hi;
    const double delta = std::max(radial_scale(L), 1e-300);
    int K = min_grading;
    if (delta < U) K = std::max(K, int(std::ceil(std::log2(U / delta))) + 2);
    K = std::min(K + L.extra_radial + (any_focus_on_cusp(L) ? 12 : 0), 60);
    const double h0 = std::ldexp(U, -K);
    std::vector<double> bp;
    for (int k = K; k >= 0; --k) bp.push_back(std::ldexp(U, -k));
    for (cplx c : L.kinks) {
        const double m = std::abs(c), u0 = (1.0 - m) * (1.0 + m);
        if (u0 <= h0 || u0 >= U) continue;
        add_graded_around(bp, u0, 0.5 * std::min(u0, U - u0), kKinkLevels, h0, U);
    }
    sort_unique(bp, 1e-15 * U);

    std::vector<Point1> pts;
    pts.reserve(std::size_t(n) * bp.size());
    const double q = L.q;
    // innermost panel (0, h0], weight absorbed
    if (L.log_tail) {
        // u = h exp(-y/(q+1)) turns u^q du into e^-y dy, and log(1/u) into a linear term
        auto gl = gauss::laguerre(n);
        const double f = std::pow(h0, q + 1.0) / (q + 1.0);
        for (int i = 0; i < n; ++i) pts.push_back({h0 * std::exp(-gl->x[i] / (q + 1.0)), f * gl->w[i]});
    } else {
        auto gj = gauss::jacobi_unit(n, q);
        const double f = std::pow(h0, q + 1.0);
        for (int i = 0; i < n; ++i) pts.push_back({h0 * gj->x[i], f * gj->w[i]});
    }
    auto gl = gauss::legendre_unit(n);
    for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
        const double a = bp[k], b = bp[k + 1], h = b - a;
        if (b == 1.0) {
            // panel reaching the origin: integrate in rho = sqrt(1-u), in which
            // smooth functions of z stay smooth (odd powers of rho are not smooth in u)
            const double rmax = std::sqrt(h);
            for (int i = 0; i < n; ++i) {
                const double rho = rmax * gl->x[i];
                const double u = 1.0 - rho * rho;
                pts.push_back({u, rmax * gl->w[i] * 2.0 * rho * std::pow(u, q)});
            }
            continue;
        }
        for (int i = 0; i < n; ++i) {
            const double u = a + h * gl->x[i];
            pts.push_back({u, h * gl->w[i] * std::pow(u, q)});
        }
    }
    return pts;
}

// Breakpoints in unwrapped coordinates within [lo, hi].
inline void add_if_inside(std::vector<double>& bp, double x, double lo, double hi) {
    if (x > lo && x < hi) bp.push_back(x);
}

// Representatives of the fraction t near the window [lo, hi] (which has length <= 1).
inline void representatives(double t, double lo, double out[3]) {
    double r = lo + wrap_unit(t - lo);  // in [lo, lo+1)
    out[0] = r;
    out[1] = r - 1.0;
    out[2] = r + 1.0;
}

inline std::vector<Point1> angular_points(const Layout& L, int n) {
    double lo = L.full_circle ? 0.0 : L.t_lo;
    double hi = L.full_circle ? 1.0 : L.t_hi;
    const double span = hi - lo;
    std::vector<double> bp{lo, hi};
    const int base = L.full_circle ? 16 : 2;
    for (int j = 1; j < base; ++j) bp.push_back(lo + span * j / base);

    std::vector<double> cusp_at;  // unwrapped cusp positions within [lo,hi]
    if (L.cusp) {
        double rep[3];
        representatives(L.cusp->angle, lo, rep);
        for (double c : rep) {
            if (c >= lo - 1e-15 && c <= hi + 1e-15) {
                double cc = std::abs(c - lo) <= 1e-15 ? lo : (std::abs(c - hi) <= 1e-15 ? hi : c);
                cusp_at.push_back(cc);
                bp.push_back(cc);
            }
            for (int j = 1; j <= 6; ++j) {
                double w = std::ldexp(span, -j);
                add_if_inside(bp, c - w, lo, hi);
                add_if_inside(bp, c + w, lo, hi);
            }
        }
    }
    for (cplx f : L.foci) {
        const double gap = focus_gap(f);
        if (gap >= 0.3 || std::abs(f) == 0.0) continue;
        const double delta = gap / (4.0 * std::numbers::pi) / (focus_on_cusp(L, f) ? 128.0 : 1.0);
        double rep[3];
        representatives(angle_fraction(f), lo, rep);
        for (double c : rep) {
            if (c < lo - span || c > hi + span) continue;
            double w = L.full_circle ? 1.0 / 16.0 : 0.5 * span;
            for (;;) {
                add_if_inside(bp, c - w, lo, hi);
                add_if_inside(bp, c + w, lo, hi);
                if (w <= delta) break;
                w *= 0.5;
            }
        }
    }
    for (cplx k : L.kinks) {
        double rep[3];
        representatives(angle_fraction(k), lo, rep);
        for (double c : rep) add_graded_around(bp, c, L.full_circle ? 1.0 / 32.0 : 0.25 * span, kKinkLevels, lo, hi);
    }
    sort_unique(bp, 1e-15 * std::max(1.0, std::abs(lo)));

    std::vector<Point1> pts;
    pts.reserve(bp.size() * n);
    auto gl = gauss::legendre_unit(n);
    const bool has_cusp = L.cusp.has_value();
    const double gamma = has_cusp ? L.cusp->exponent : 0.0;
    std::shared_ptr<const gauss::Rule> gj;
    if (has_cusp && gamma > 0.0) gj = gauss::jacobi_unit(n, -gamma);
    auto touches = [&](double x) {
        for (double c : cusp_at)
            if (std::abs(x - c) <= 1e-14) return true;
        return false;
    };
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        const double a = bp[i], b = bp[i + 1], h = b - a;
        if (h <= 0.0) continue;
        if (has_cusp && gamma > 0.0 && (touches(a) || touches(b))) {
            // int (2|t - t_c|)^-gamma g = h (2h)^-gamma sum w_i g(t_c +- h x_i)
            const double f = h * std::pow(2.0 * h, -gamma);
            const bool from_left = touches(a);
            for (int k = 0; k < n; ++k) {
                double t = from_left ? a + h * gj->x[k] : b - h * gj->x[k];
                pts.push_back({t, f * gj->w[k]});
            }
            continue;
        }
        for (int k = 0; k < n; ++k) {
            const double t = a + h * gl->x[k];
            double w = h * gl->w[k];
            if (has_cusp && gamma > 0.0) w *= std::pow(2.0 * circular_distance(t, L.cusp->angle), -gamma);
            pts.push_back({t, w});
        }
    }
    return pts;
}

inline NodeSet product_nodes(const std::vector<Point1>& rad, const std::vector<Point1>& ang) {
    std::vector<cplx> e(ang.size());
    for (std::size_t j = 0; j < ang.size(); ++j) {
        double th = kTwoPi * ang[j].x;
        e[j] = cplx(std::cos(th), std::sin(th));
    }
    NodeSet nodes;
    nodes.reserve(rad.size() * ang.size());
    for (const auto& r : rad) {
        const double rho = std::sqrt(1.0 - r.x);
        for (std::size_t j = 0; j < ang.size(); ++j) nodes.push_back({rho * e[j], r.x, r.w * ang[j].w});
    }
    return nodes;
}

}  // namespace detail

inline void check_weight_exponent(double q) {
    if (!(q > -1.0)) throw std::invalid_argument("weight exponent must be > -1 (non-integrable otherwise)");
}

// Graded composite rule with n Gauss points per panel.
inline NodeSet graded_nodes(const Layout& L, int n, int min_grading = 3) {
    check_weight_exponent(L.q);
    if (!(L.u_hi > 0.0 && L.u_hi <= 1.0)) throw std::invalid_argument("graded_nodes: u range must lie in (0,1]");
    return detail::product_nodes(detail::radial_points(L, n, min_grading), detail::angular_points(L, n));
}

// Gauss-Jacobi(nr) in u x trapezoid(nt) in t over the whole disk.
inline NodeSet plain_nodes(double q, int nr, int nt) {
    check_weight_exponent(q);
    auto gj = gauss::jacobi_unit(nr, q);
    std::vector<detail::Point1> rad(nr), ang(nt);
    for (int i = 0; i < nr; ++i) rad[i] = {gj->x[i], gj->w[i]};
    for (int j = 0; j < nt; ++j) ang[j] = {double(j) / nt, 1.0 / nt};
    return detail::product_nodes(rad, ang);
}

namespace detail {
template <class T>
double magnitude(const T& v) {
    return std::abs(v);
}

template <class T, class Build, class F>
QuadratureResult<T> refine(const QuadratureSpec& spec, Build&& build, F&& f) {
    QuadratureResult<T> res;
    T prev{};
    for (int lvl = 0; lvl < spec.refinement_levels; ++lvl) {
        NodeSet nodes = build(lvl);
        T v = integrate_nodes(nodes, f);
        res.nodes_used += long(nodes.size());
        if (lvl > 0) res.error_estimate = magnitude(v - prev);
        prev = v;
        res.value = v;
    }
    res.converged = spec.refinement_levels > 1 &&
                    std::isfinite(magnitude(res.value)) &&
                    res.error_estimate <= spec.rel_tol * magnitude(res.value) + 1e-14;
    if (!std::isfinite(res.error_estimate)) res.converged = false;
    return res;
}
}  // namespace detail

template <class F>
auto integrate_graded(const Layout& L, F&& f, const QuadratureSpec& spec) {
    spec.validate();
    using T = integral_t<F>;
    return detail::refine<T>(
        spec, [&](int lvl) { return graded_nodes(L, spec.panel_nodes + 4 * lvl, spec.min_grading); }, f);
}

// int_D f(z) (1-|z|^2)^q dA(z) with the plain product rule.
template <class F>
auto integrate_disk(F&& f, double q, const QuadratureSpec& spec = {}) {
    spec.validate();
    check_weight_exponent(q);
    using T = integral_t<F>;
    return detail::refine<T>(
        spec,
        [&](int lvl) { return plain_nodes(q, spec.radial_nodes << lvl, spec.angular_nodes << lvl); }, f);
}

// Same integral with the graded rule, refined toward the given foci.
template <class F>
auto integrate_disk(F&& f, double q, const QuadratureSpec& spec, const std::vector<cplx>& foci,
                    const std::vector<cplx>& kinks = {}) {
    Layout L = disk_layout(q);
    L.foci = foci;
    L.kinks = kinks;
    return integrate_graded(L, f, spec);
}

// int_{S(I)} f(z) (1-|z|^2)^q dA(z)
template <class F>
auto integrate_box(F&& f, const CarlesonBox& box, double q, const QuadratureSpec& spec = {},
                   const std::vector<cplx>& foci = {}, const std::vector<cplx>& kinks = {}) {
    check_weight_exponent(q);
    Layout L = box_layout(box, q);
    L.foci = foci;
    L.kinks = kinks;
    return integrate_graded(L, f, spec);
}

}  // namespace fpqs
