#pragma once
// J_g f = int_0^z f g',  I_g f = int_0^z f' g,  M_g f = f g, at the derivative level,
// plus embedding ratios and operator-boundedness reports built from test batteries.

#include "fpqs/carleson.hpp"
#include "fpqs/funcspace.hpp"
#include "fpqs/gauss.hpp"
#include "fpqs/measures.hpp"
#include "fpqs/norms.hpp"
#include "fpqs/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpqs {

// ---- fields ---------------------------------------------------------------------

namespace detail {
inline std::vector<cplx> merge_foci(const AnalyticFunction& f, const AnalyticFunction& g) {
    auto a = f.foci();
    auto b = g.foci();
    a.insert(a.end(), b.begin(), b.end());
    return a;
}
}  // namespace detail

// (J_g f)' = f g'
inline DerivativeField jg_deriv(const AnalyticFunction& f, const AnalyticFunction& g) {
    auto fp = std::make_shared<const AnalyticFunction>(f);
    auto gp = std::make_shared<const AnalyticFunction>(g);
    return {[fp, gp](cplx z) { return fp->eval(z) * gp->deriv(z); }, detail::merge_foci(f, g)};
}

// (I_g f)' = f' g
inline DerivativeField ig_deriv(const AnalyticFunction& f, const AnalyticFunction& g) {
    auto fp = std::make_shared<const AnalyticFunction>(f);
    auto gp = std::make_shared<const AnalyticFunction>(g);
    return {[fp, gp](cplx z) { return fp->deriv(z) * gp->eval(z); }, detail::merge_foci(f, g)};
}

// (M_g f)' = f' g + f g'
inline DerivativeField mg_deriv(const AnalyticFunction& f, const AnalyticFunction& g) {
    auto fp = std::make_shared<const AnalyticFunction>(f);
    auto gp = std::make_shared<const AnalyticFunction>(g);
    return {[fp, gp](cplx z) { return fp->deriv(z) * gp->eval(z) + fp->eval(z) * gp->deriv(z); },
            detail::merge_foci(f, g)};
}

// ---- coefficient forms for polynomials -----------------------------------------

inline std::vector<cplx> cauchy_product(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.empty() || b.empty()) return {};
    if (a.size() + b.size() - 2 > kMaxPolyDegree)
        throw std::invalid_argument("polynomial product exceeds degree cap " + std::to_string(kMaxPolyDegree));
    std::vector<cplx> c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline const std::vector<cplx>& poly_coeffs(const AnalyticFunction& f) {
    const auto* p = std::get_if<fn::Polynomial>(&f.variant());
    if (!p) throw std::invalid_argument("coefficient form needs polynomial inputs");
    return p->coeffs;
}

// Antiderivative vanishing at 0.
inline std::vector<cplx> integrate_coeffs(const std::vector<cplx>& c) {
    std::vector<cplx> out(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) out[k + 1] = c[k] / double(k + 1);
    return out;
}

// Coefficients of the fields f g', f' g, (f g)'.
inline std::vector<cplx> jg_field_coeffs(const AnalyticFunction& f, const AnalyticFunction& g) {
    return cauchy_product(poly_coeffs(f), derivative_coeffs(poly_coeffs(g)));
}
inline std::vector<cplx> ig_field_coeffs(const AnalyticFunction& f, const AnalyticFunction& g) {
    return cauchy_product(derivative_coeffs(poly_coeffs(f)), poly_coeffs(g));
}
inline std::vector<cplx> mg_field_coeffs(const AnalyticFunction& f, const AnalyticFunction& g) {
    return derivative_coeffs(cauchy_product(poly_coeffs(f), poly_coeffs(g)));
}

// J_g f, I_g f, M_g f themselves, as polynomials.
inline AnalyticFunction jg_poly(const AnalyticFunction& f, const AnalyticFunction& g) {
    return polynomial(integrate_coeffs(jg_field_coeffs(f, g)));
}
inline AnalyticFunction ig_poly(const AnalyticFunction& f, const AnalyticFunction& g) {
    return polynomial(integrate_coeffs(ig_field_coeffs(f, g)));
}
inline AnalyticFunction mg_poly(const AnalyticFunction& f, const AnalyticFunction& g) {
    return polynomial(cauchy_product(poly_coeffs(f), poly_coeffs(g)));
}

// Value of the function whose derivative is `field`, vanishing at 0, by Gauss-Legendre
// integration along the segment [0, z].
inline cplx antiderivative_value(const DerivativeField& field, cplx z, int nodes = 64) {
    auto gl = gauss::legendre_unit(nodes);
    cplx acc = 0.0;
    for (int i = 0; i < nodes; ++i) acc += gl->w[i] * field(gl->x[i] * z);
    return acc * z;
}

// ---- batteries ------------------------------------------------------------------

struct BatteryMember {
    std::string label;
    AnalyticFunction f;
};
using Battery = std::vector<BatteryMember>;

inline constexpr const char* kStandardBatteryVersion = "v1";

// z, z^3, f_{b,alpha} at b = 0.5, 0.9, log kernels at 0.5i, 0.9i, the normalized log
// square at -0.9 and psi_a at a = -0.9i.
inline Battery standard_battery(double alpha) {
    Battery b;
    b.push_back({"z", identity()});
    b.push_back({"z^3", monomial(3)});
    b.push_back({"lemma8(0.5)", lemma_eight(DiskPoint(0.5, 0.0), alpha)});
    b.push_back({"lemma8(0.9)", lemma_eight(DiskPoint(0.9, 0.0), alpha)});
    b.push_back({"log(0.5i)", log_kernel(DiskPoint(0.0, 0.5))});
    b.push_back({"log(0.9i)", log_kernel(DiskPoint(0.0, 0.9))});
    b.push_back({"logsq(-0.9)", normalized_log_square(DiskPoint(-0.9, 0.0))});
    b.push_back({"psi(-0.9i)", psi_family(DiskPoint(0.0, -0.9), alpha)});
    return b;
}

inline double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// ---- embedding ratios -------------------------------------------------------------

struct EmbeddingEntry {
    std::string label;
    double tent = 0.0;   // ||f||_{T^inf_{p,s}(mu)}
    double full = 0.0;   // |f(0)| + ||f||_{F(p, p alpha - 2, s)}
    double ratio = 0.0;  // tent^p / full^p
    bool converged = true;
};

struct EmbeddingReport {
    std::vector<EmbeddingEntry> entries;
    double max_ratio = 0.0;
    double median_ratio = 0.0;
    int depth = 0;
};

inline EmbeddingReport embedding_ratio(const Battery& battery, const MeasureSpec& mu, const SpaceParams& params,
                                       int depth, const SearchParams& sp = {}, const QuadratureSpec& spec = {}) {
    if (battery.empty()) throw std::invalid_argument("embedding_ratio: empty battery");
    EmbeddingReport rep;
    rep.depth = depth;
    rep.entries = parallel_map<EmbeddingEntry>(battery.size(), [&](std::size_t i) {
        EmbeddingEntry e;
        e.label = battery[i].label;
        const auto& f = battery[i].f;
        auto fr = fps_seminorm(deriv(f), params, sp, spec);
        e.full = std::abs(f.eval(0.0)) + fr.value;
        if (!(e.full > 0.0)) throw std::invalid_argument("embedding_ratio: zero-norm function " + e.label);
        auto tr = tent_norm(f, mu, params.p, params.s, depth, spec);
        e.tent = tr.value;
        e.ratio = std::pow(e.tent / e.full, params.p);
        e.converged = fr.converged && tr.converged;
        return e;
    });
    std::vector<double> r;
    for (const auto& e : rep.entries) {
        rep.max_ratio = std::max(rep.max_ratio, e.ratio);
        r.push_back(e.ratio);
    }
    rep.median_ratio = median(r);
    return rep;
}

// ---- operator boundedness -----------------------------------------------------------

enum class OperatorKind { Jg, Ig, Mg };

inline const char* operator_name(OperatorKind k) {
    switch (k) {
        case OperatorKind::Jg: return "jg";
        case OperatorKind::Ig: return "ig";
        case OperatorKind::Mg: return "mg";
    }
    return "?";
}

struct OperatorEntry {
    std::string label;
    double op_norm = 0.0;  // full norm of the image
    double f_norm = 0.0;   // full norm of f
    double ratio = 0.0;
};

struct OperatorReport {
    OperatorKind kind = OperatorKind::Jg;
    std::string panel1_label;
    ConstantReport panel1;  // membership functional of g
    std::string panel2_label;
    ConstantReport panel2;  // Carleson constant of the induced measure
    std::vector<OperatorEntry> entries;
    double max_ratio = 0.0;
    double median_ratio = 0.0;
    std::string flag;       // set when no characterization is available
};

// Whether the J_g / multiplier characterization covers alpha > 1 with gamma = s + p(alpha-1).
inline bool alpha_gt1_characterized(double p, double gamma) {
    return (p <= 1.0) || (p > 1.0 && gamma > 1.0) || (p > 1.0 && p <= 2.0 && gamma == 1.0);
}

inline DerivativeField operator_field(OperatorKind k, const AnalyticFunction& f, const AnalyticFunction& g) {
    switch (k) {
        case OperatorKind::Jg: return jg_deriv(f, g);
        case OperatorKind::Ig: return ig_deriv(f, g);
        case OperatorKind::Mg: return mg_deriv(f, g);
    }
    throw std::logic_error("operator_field");
}

inline cplx operator_value_at_zero(OperatorKind k, const AnalyticFunction& f, const AnalyticFunction& g) {
    return k == OperatorKind::Mg ? f.eval(0.0) * g.eval(0.0) : cplx(0.0);
}

// Full norm ratio ||op f|| / ||f|| in F(p, p alpha - 2, s).
inline OperatorEntry operator_ratio(OperatorKind k, const BatteryMember& m, const AnalyticFunction& g,
                                    const SpaceParams& params, const SearchParams& sp, const QuadratureSpec& spec) {
    OperatorEntry e;
    e.label = m.label;
    e.f_norm = full_norm(m.f, params, sp, spec);
    if (!(e.f_norm > 0.0)) throw std::invalid_argument("operator ratio: zero-norm function " + m.label);
    e.op_norm = std::abs(operator_value_at_zero(k, m.f, g)) + fps_seminorm(operator_field(k, m.f, g), params, sp, spec).value;
    e.ratio = e.op_norm / e.f_norm;
    return e;
}

inline OperatorReport operator_boundedness_report(const AnalyticFunction& g, const SpaceParams& params,
                                                  OperatorKind kind, const Battery& battery, int depth,
                                                  const SearchParams& sp = {}, const QuadratureSpec& spec = {}) {
    if (battery.empty()) throw std::invalid_argument("operator_boundedness_report: empty battery");
    OperatorReport rep;
    rep.kind = kind;
    const double p = params.p, a = params.alpha, s = params.s;
    const double gamma = s + p * (a - 1.0);
    const MeasureSpec mug = induced(g, params);

    if (kind == OperatorKind::Jg) {
        if (a < 1.0) {
            rep.panel1_label = "F(p,p*alpha-2,s) seminorm of g";
            rep.panel1 = fps_seminorm(deriv(g), params, sp, spec);
        } else if (a == 1.0) {
            rep.panel1_label = "logarithmic F(p,p-2,s) seminorm of g";
            rep.panel1 = logF_seminorm(deriv(g), params, sp, spec);
        } else {
            rep.panel1_label = "F(p,p-2,gamma) seminorm of g, gamma=s+p(alpha-1)";
            rep.panel1 = fps_seminorm(deriv(g), SpaceParams(p, 1.0, gamma), sp, spec);
        }
    } else {
        rep.panel1_label = "H^inf norm of g";
        rep.panel1 = hinf_norm(g);
    }
    if (a == 1.0) {
        rep.panel2_label = "(p,s)-logarithmic Carleson constant of mu_g";
        rep.panel2 = log_carleson_constant(mug, p, s, depth, spec);
    } else if (a < 1.0) {
        rep.panel2_label = "s-Carleson constant of mu_g";
        rep.panel2 = carleson_constant(mug, s, depth, spec);
    } else {
        rep.panel2_label = "gamma-Carleson constant of mu_g";
        rep.panel2 = carleson_constant(mug, gamma, depth, spec);
    }
    if (a > 1.0 && !alpha_gt1_characterized(p, gamma))
        rep.flag = "no characterization known for alpha>1 in this (p, gamma) regime; constants reported without verdict";

    rep.entries = parallel_map<OperatorEntry>(
        battery.size(), [&](std::size_t i) { return operator_ratio(kind, battery[i], g, params, sp, spec); });
    std::vector<double> r;
    for (const auto& e : rep.entries) {
        rep.max_ratio = std::max(rep.max_ratio, e.ratio);
        r.push_back(e.ratio);
    }
    rep.median_ratio = median(r);
    return rep;
}

}  // namespace fpqs
