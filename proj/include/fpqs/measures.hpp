#pragma once
// Positive measures on the disk and their integration.
//
// Every variant reduces to a normal form: an optional density
//     scale * u^e * (log 2/u)^-tau * cusp(t) * factor(z),   u = 1-|z|^2 < u_cut,
// plus a finite list of atoms.  The radial power is absorbed into the quadrature
// weight, the cusp into the angular rule.

#include "fpqs/disk.hpp"
#include "fpqs/funcspace.hpp"
#include "fpqs/quadrature.hpp"

#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <variant>
#include <vector>

namespace fpqs {

class MeasureSpec;
using MeasurePtr = std::shared_ptr<const MeasureSpec>;

namespace ms {

// c (1-|z|^2)^(sigma-2) dA, c = sigma-1 for sigma > 1.  For sigma <= 1 that density
// has infinite mass, so the family is realized by a boundary cusp at angle 0:
//     (1-|z|^2)^(sigma/2-1) (2 d(t,0))^(sigma/2-1),
// which has finite mass and boxes of mass ~ |I|^sigma at the cusp.
struct PowerDensity {
    double sigma;
};
// (1-|z|^2)^(sigma-2) (log 2/(1-|z|^2))^-tau dA, same cusp realization for sigma <= 1.
struct LogPowerDensity {
    double sigma;
    double tau;
};

struct RadialProfile {
    enum Kind { Power, LogPower } kind = Power;
    double e = 0.0;    // (1-|z|^2)^e, e > -1
    double tau = 0.0;  // (log 2/(1-|z|^2))^-tau for LogPower
};
struct AngularProfile {
    enum Kind { Uniform, Cosine, Cusp } kind = Uniform;
    double k = 0.0;    // Cosine: 1 + k cos(2 pi (t - t0)), |k| <= 1;  Cusp: (2 d(t,t0))^-k, 0 <= k < 1
    double t0 = 0.0;   // fraction of the circle
};
struct Separable {
    RadialProfile radial;
    AngularProfile angular;
};

struct Atom {
    DiskPoint z;
    double mass;
};
struct Atomic {
    std::vector<Atom> atoms;
};
// |g'(z)|^p (1-|z|^2)^(s+p alpha-2) dA
struct Induced {
    AnalyticFunction g;
    SpaceParams params;
};
// mu restricted to {|z| > r}
struct Restricted {
    MeasurePtr inner;
    double r;
};

using Variant = std::variant<PowerDensity, LogPowerDensity, Separable, Atomic, Induced, Restricted>;

}  // namespace ms

class MeasureSpec {
public:
    template <class T>
        requires std::is_constructible_v<ms::Variant, T&&> && (!std::is_same_v<std::decay_t<T>, MeasureSpec>)
    MeasureSpec(T&& v) : v_(std::forward<T>(v)) {  // NOLINT: implicit from any variant
        validate();
    }
    const ms::Variant& variant() const { return v_; }

private:
    void validate() const;
    ms::Variant v_;
};

inline MeasureSpec power_density(double sigma) { return ms::PowerDensity{sigma}; }
inline MeasureSpec log_power_density(double sigma, double tau) { return ms::LogPowerDensity{sigma, tau}; }
inline MeasureSpec area_measure() { return power_density(2.0); }
inline MeasureSpec atomic(std::vector<ms::Atom> atoms) { return ms::Atomic{std::move(atoms)}; }
inline MeasureSpec zero_measure() { return ms::Atomic{}; }
inline MeasureSpec separable(ms::RadialProfile r, ms::AngularProfile a) { return ms::Separable{r, a}; }
inline MeasureSpec induced(AnalyticFunction g, SpaceParams params) { return ms::Induced{std::move(g), params}; }

// Nested restrictions collapse: restrict(restrict(mu, r1), r2) = restrict(mu, max(r1, r2)).
inline MeasureSpec restrict(const MeasureSpec& mu, double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("restrict: r must lie in (0,1)");
    if (const auto* inner = std::get_if<ms::Restricted>(&mu.variant()))
        return ms::Restricted{inner->inner, std::max(inner->r, r)};
    return ms::Restricted{std::make_shared<const MeasureSpec>(mu), r};
}

inline void MeasureSpec::validate() const {
    std::visit(detail::overloaded{
                   [](const ms::PowerDensity& m) {
                       if (!(m.sigma > 0.0)) throw std::invalid_argument("PowerDensity: sigma must be > 0");
                   },
                   [](const ms::LogPowerDensity& m) {
                       if (!(m.sigma > 0.0)) throw std::invalid_argument("LogPowerDensity: sigma must be > 0");
                       if (!(m.tau >= 0.0)) throw std::invalid_argument("LogPowerDensity: tau must be >= 0");
                   },
                   [](const ms::Separable& m) {
                       if (!(m.radial.e > -1.0))
                           throw std::invalid_argument("Separable: radial exponent must be > -1 (finite mass)");
                       if (!(m.radial.tau >= 0.0)) throw std::invalid_argument("Separable: tau must be >= 0");
                       if (m.angular.kind == ms::AngularProfile::Cosine && !(std::abs(m.angular.k) <= 1.0))
                           throw std::invalid_argument("Separable: cosine amplitude must satisfy |k| <= 1");
                       if (m.angular.kind == ms::AngularProfile::Cusp && !(m.angular.k >= 0.0 && m.angular.k < 1.0))
                           throw std::invalid_argument("Separable: cusp exponent must lie in [0,1)");
                   },
                   [](const ms::Atomic& m) {
                       for (const auto& a : m.atoms)
                           if (!(a.mass > 0.0) || !std::isfinite(a.mass))
                               throw std::invalid_argument("Atomic: masses must be positive and finite");
                   },
                   [](const ms::Induced&) {},
                   [](const ms::Restricted& m) {
                       if (!m.inner) throw std::invalid_argument("Restricted: missing inner measure");
                       if (!(m.r > 0.0 && m.r < 1.0)) throw std::invalid_argument("Restricted: r must lie in (0,1)");
                   },
               },
               v_);
}

struct DensityForm {
    double scale = 1.0;
    double e = 0.0;
    double tau = 0.0;
    std::optional<Cusp> cusp;
    std::function<double(cplx)> factor;  // empty means 1
    std::vector<cplx> foci;
    std::vector<cplx> kinks;  // cone points of the factor
    double u_cut = 1.0;
};

struct MeasureForm {
    std::optional<DensityForm> density;
    std::vector<ms::Atom> atoms;
};

namespace detail {
inline DensityForm power_form(double sigma, double tau, bool normalize) {
    DensityForm d;
    d.tau = tau;
    if (sigma > 1.0) {
        d.e = sigma - 2.0;
        d.scale = normalize ? sigma - 1.0 : 1.0;
    } else {
        d.e = 0.5 * sigma - 1.0;
        d.cusp = Cusp{0.0, 1.0 - 0.5 * sigma};
    }
    return d;
}
}  // namespace detail

inline MeasureForm normal_form(const MeasureSpec& mu) {
    return std::visit(
        detail::overloaded{
            [](const ms::PowerDensity& m) { return MeasureForm{detail::power_form(m.sigma, 0.0, true), {}}; },
            [](const ms::LogPowerDensity& m) { return MeasureForm{detail::power_form(m.sigma, m.tau, false), {}}; },
            [](const ms::Separable& m) {
                DensityForm d;
                d.e = m.radial.e;
                d.tau = m.radial.kind == ms::RadialProfile::LogPower ? m.radial.tau : 0.0;
                if (m.angular.kind == ms::AngularProfile::Cusp && m.angular.k > 0.0)
                    d.cusp = Cusp{wrap_unit(m.angular.t0), m.angular.k};
                if (m.angular.kind == ms::AngularProfile::Cosine) {
                    const double k = m.angular.k, t0 = m.angular.t0;
                    d.factor = [k, t0](cplx z) { return 1.0 + k * std::cos(std::arg(z) - kTwoPi * t0); };
                }
                return MeasureForm{d, {}};
            },
            [](const ms::Atomic& m) { return MeasureForm{std::nullopt, m.atoms}; },
            [](const ms::Induced& m) {
                DensityForm d;
                d.e = m.params.s + m.params.p * m.params.alpha - 2.0;
                auto g = std::make_shared<const AnalyticFunction>(m.g);
                const double p = m.params.p;
                if (p == 2.0)
                    d.factor = [g](cplx z) { return std::norm(g->deriv(z)); };
                else
                    d.factor = [g, p](cplx z) { return std::pow(std::norm(g->deriv(z)), 0.5 * p); };
                d.foci = m.g.foci();
                if (has_cone_points(p)) d.kinks = interior_zeros([g](cplx z) { return g->deriv(z); });
                return MeasureForm{d, {}};
            },
            [](const ms::Restricted& m) {
                MeasureForm f = normal_form(*m.inner);
                if (f.density) f.density->u_cut = std::min(f.density->u_cut, (1.0 - m.r) * (1.0 + m.r));
                std::vector<ms::Atom> kept;
                for (const auto& a : f.atoms)
                    if (a.z.modulus() > m.r) kept.push_back(a);
                f.atoms = std::move(kept);
                return f;
            },
        },
        mu.variant());
}

// Integration region: whole disk or a Carleson box.
struct Region {
    std::optional<CarlesonBox> box;
    static Region disk() { return {}; }
    static Region of(const CarlesonBox& b) { return {b}; }
};

inline bool atom_in_region(const ms::Atom& a, const Region& R) {
    return !R.box || R.box->contains_closed(a.z);
}

// Integral of F(z) (1-|z|^2)^extra_q against mu over the region.  F is called as
// F(z) or F(z, u).  The density's radial power is merged with extra_q into the rule.
template <class F>
auto integrate_measure(const MeasureForm& form, F&& f, const Region& R, double extra_q, const QuadratureSpec& spec,
                       const std::vector<cplx>& extra_foci = {}, const std::vector<cplx>& kinks = {}) {
    using T = integral_t<F>;
    QuadratureResult<T> res;
    res.converged = true;
    if (form.density) {
        const DensityForm& d = *form.density;
        Layout L = R.box ? box_layout(*R.box, d.e + extra_q) : disk_layout(d.e + extra_q);
        L.u_hi = std::min(L.u_hi, d.u_cut);
        L.cusp = d.cusp;
        L.foci = d.foci;
        L.foci.insert(L.foci.end(), extra_foci.begin(), extra_foci.end());
        L.kinks = d.kinks;
        L.kinks.insert(L.kinks.end(), kinks.begin(), kinks.end());
        if (d.tau > 0.0) {
            L.extra_radial = 6;
            L.log_tail = true;
        }
        const double tau = d.tau, scale = d.scale;
        const auto& factor = d.factor;
        auto g = [&](cplx z, double u) {
            T v = call_integrand(f, z, u) * scale;
            if (tau > 0.0) v *= std::pow(std::log(2.0 / u), -tau);
            if (factor) v *= factor(z);
            return v;
        };
        res = integrate_graded(L, g, spec);
    }
    T atoms{};
    for (const auto& a : form.atoms) {
        if (!atom_in_region(a, R)) continue;
        const cplx z = a.z;
        const double u = (1.0 - std::abs(z)) * (1.0 + std::abs(z));
        T v = call_integrand(f, z, u) * a.mass;
        if (extra_q != 0.0) v *= std::pow(u, extra_q);
        atoms += v;
    }
    res.value += atoms;
    return res;
}

template <class F>
auto integrate_measure(const MeasureSpec& mu, F&& f, const Region& R, double extra_q, const QuadratureSpec& spec,
                       const std::vector<cplx>& extra_foci = {}, const std::vector<cplx>& kinks = {}) {
    return integrate_measure(normal_form(mu), std::forward<F>(f), R, extra_q, spec, extra_foci, kinks);
}

inline QuadratureResult<double> measure_of_box(const MeasureSpec& mu, const CarlesonBox& box,
                                               const QuadratureSpec& spec = {}) {
    return integrate_measure(mu, [](cplx) { return 1.0; }, Region::of(box), 0.0, spec);
}

inline QuadratureResult<double> total_mass(const MeasureSpec& mu, const QuadratureSpec& spec = {}) {
    return integrate_measure(mu, [](cplx) { return 1.0; }, Region::disk(), 0.0, spec);
}

// (1-|a|^2)^t / |1 - conj(a) z|^(s+t)
struct BlascoKernel {
    DiskPoint a;
    double s;
    double t;
    double operator()(cplx z) const {
        const cplx av = a;
        return std::pow(1.0 - std::norm(av), t) * std::pow(std::norm(1.0 - std::conj(av) * z), -0.5 * (s + t));
    }
};

// int |f|^p [kernel] dmu
inline QuadratureResult<double> integrate_p_power(const MeasureSpec& mu, const AnalyticFunction& f, double p,
                                                  const std::optional<BlascoKernel>& kernel,
                                                  const QuadratureSpec& spec = {}) {
    if (!(p >= 0.0)) throw std::invalid_argument("integrate_p_power: p must be >= 0");
    std::vector<cplx> foci = f.foci();
    if (kernel) {
        if (!(kernel->s > 0.0 && kernel->t > 0.0))
            throw std::invalid_argument("integrate_p_power: kernel needs s, t > 0");
        foci.push_back(kernel->a);
    }
    auto g = [&](cplx z) {
        double v = p == 0.0 ? 1.0 : (p == 2.0 ? std::norm(f.eval(z)) : std::pow(std::abs(f.eval(z)), p));
        if (kernel) v *= (*kernel)(z);
        return v;
    };
    std::vector<cplx> kinks;
    if (has_cone_points(p)) kinks = interior_zeros([&f](cplx z) { return f.eval(z); });
    return integrate_measure(mu, g, Region::disk(), 0.0, spec, foci, kinks);
}

}  // namespace fpqs
