#pragma once
// Carleson-type constants (box form and kernel form), vanishing diagnostics, and the
// two-kernel integral estimates used to control test-function norms.

#include "fpqs/measures.hpp"
#include "fpqs/norms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fpqs {

// sup_I |I|^-s (log 2/|I|)^p mu(S(I)) over dyadic arcs up to `depth`.
inline ConstantReport log_carleson_constant(const MeasureSpec& mu, double p, double s, int depth,
                                            const QuadratureSpec& spec = {}) {
    return arc_sup(normal_form(mu), [](cplx) { return 1.0; }, p, s, depth, spec);
}

inline ConstantReport carleson_constant(const MeasureSpec& mu, double s, int depth, const QuadratureSpec& spec = {}) {
    return log_carleson_constant(mu, 0.0, s, depth, spec);
}

// sup_a (log 2/(1-|a|^2))^p int (1-|a|^2)^t / |1-conj(a) z|^(s+t) dmu(z)
inline ConstantReport blasco_constant(const MeasureSpec& mu, double p, double s, double t, const SearchParams& sp = {},
                                      const QuadratureSpec& spec = {}) {
    if (!(s > 0.0 && t > 0.0)) throw std::invalid_argument("blasco_constant: need s, t > 0");
    if (!(p >= 0.0)) throw std::invalid_argument("blasco_constant: p must be >= 0");
    return search_sup(kernel_objective(mu, constant(1.0), 0.0, s, t, p), sp, spec);
}

// (k, sup over arcs with |I| <= 2^-k), k = 0..depth.
inline std::vector<std::pair<int, double>> vanishing_profile(const MeasureSpec& mu, double p, double s, int depth,
                                                             const QuadratureSpec& spec = {}) {
    auto rep = log_carleson_constant(mu, p, s, depth, spec);
    std::vector<std::pair<int, double>> out(depth + 1);
    double run = 0.0;
    for (int k = depth; k >= 0; --k) {
        run = std::max(run, rep.profile[k].second);
        out[k] = {k, run};
    }
    return out;
}

// Least-squares slope of y on x; residual is the RMS deviation.
struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;
};

inline SlopeFit fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) throw std::invalid_argument("fit_slope: need at least two points");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= double(n);
    my /= double(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    SlopeFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double rr = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double e = y[i] - (f.intercept + f.slope * x[i]);
        rr += e * e;
    }
    f.residual = std::sqrt(rr / double(n));
    return f;
}

// ---- two-kernel integrals -------------------------------------------------------

// I(a,b) = int (1-|z|^2)^s |1-conj(a) z|^-r |1-conj(b) z|^-t dA
inline QuadratureResult<double> kernel_pair_integral(cplx a, cplx b, double s, double r, double t,
                                                     const QuadratureSpec& spec = {}) {
    const cplx ac = std::conj(a), bc = std::conj(b);
    auto f = [&](cplx z) {
        return std::pow(std::norm(1.0 - ac * z), -0.5 * r) * std::pow(std::norm(1.0 - bc * z), -0.5 * t);
    };
    return integrate_disk(f, s, spec, {a, b});
}

struct Lemma6Result {
    double value = 0.0;
    double bound = 0.0;   // bound expression with constant 1; NaN at regime boundaries
    std::string regime;   // "r,t<2+s" | "t<2+s<r" | "r<2+s<t" | "r,t>2+s" | "boundary"
    bool converged = false;
};

inline Lemma6Result lemma6_estimate(DiskPoint a, DiskPoint b, double s, double r, double t,
                                    const QuadratureSpec& spec = {}) {
    if (!(s > -1.0)) throw std::invalid_argument("lemma6_estimate: s must be > -1");
    if (!(r > 0.0 && t > 0.0)) throw std::invalid_argument("lemma6_estimate: r, t must be > 0");
    if (!(r + t - s - 2.0 > 0.0)) throw std::invalid_argument("lemma6_estimate: need r + t - s - 2 > 0");
    Lemma6Result res;
    auto q = kernel_pair_integral(a, b, s, r, t, spec);
    res.value = q.value;
    res.converged = q.converged;
    const double c = 2.0 + s;
    const cplx av = a, bv = b;
    const double dab = std::abs(1.0 - std::conj(av) * bv);
    const double ma = 1.0 - std::norm(av), mb = 1.0 - std::norm(bv);
    if (r == c || t == c) {
        res.regime = "boundary";
        res.bound = std::numeric_limits<double>::quiet_NaN();
    } else if (r < c && t < c) {
        res.regime = "r,t<2+s";
        res.bound = std::pow(dab, -(r + t - s - 2.0));
    } else if (t < c && c < r) {
        res.regime = "t<2+s<r";
        res.bound = std::pow(ma, -(r - s - 2.0)) * std::pow(dab, -t);
    } else if (r < c && c < t) {
        res.regime = "r<2+s<t";
        res.bound = std::pow(mb, -(t - s - 2.0)) * std::pow(dab, -r);
    } else {
        res.regime = "r,t>2+s";
        res.bound = std::pow(ma, -(r - s - 2.0)) * std::pow(dab, -t) + std::pow(mb, -(t - s - 2.0)) * std::pow(dab, -r);
    }
    return res;
}

// I(a,b) (1-|a|^2)^(r+t-s-2), valid for 0 < r+t-s-2 < r.
inline double cor7_check(DiskPoint a, DiskPoint b, double s, double r, double t, const QuadratureSpec& spec = {}) {
    const double e = r + t - s - 2.0;
    if (!(s > -1.0 && r > 0.0 && t > 0.0) || !(e > 0.0 && e < r))
        throw std::invalid_argument("cor7_check: need 0 < r + t - s - 2 < r");
    const double ma = 1.0 - std::norm(a.value());
    return kernel_pair_integral(a, b, s, r, t, spec).value * std::pow(ma, e);
}

}  // namespace fpqs
