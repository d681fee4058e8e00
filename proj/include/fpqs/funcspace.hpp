#pragma once
// Analytic functions on the disk: polynomials and closed-form test families, with
// exact values and exact derivatives.  Principal branches throughout; they are valid
// because Re(1 - conj(b) z) > 0 whenever |b|, |z| < 1.

#include "fpqs/disk.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace fpqs {

inline constexpr std::size_t kMaxPolyDegree = 256;

class AnalyticFunction;
using FunctionPtr = std::shared_ptr<const AnalyticFunction>;

namespace fn {

struct Polynomial {
    std::vector<cplx> coeffs;  // c_0 + c_1 z + ...
};
// f_{b,alpha} = (1 - conj(b) z)^(1-alpha) / (1-alpha); alpha = 1 is the log kernel.
struct LemmaEight {
    DiskPoint b;
    double alpha;
};
// log(2 / (1 - conj(b) z))
struct LogKernel {
    DiskPoint b;
};
// (log 2/(1-|w|^2))^-1 (log 2/(1 - conj(w) z))^2
struct NormalizedLogSquare {
    DiskPoint w;
};
// scale (1 - conj(b) z)^-gamma
struct PowerKernel {
    DiskPoint b;
    double gamma;
    cplx scale;
};
// h_a = (1-|a|^2) / (alpha (1 - conj(a) z)^alpha)
struct HFamily {
    DiskPoint a;
    double alpha;
};
// psi_a = (1-|a|^2)^2 (1 - conj(a) z)^-(alpha+1) - (1-|a|^2)(1 - conj(a) z)^-alpha
struct PsiFamily {
    DiskPoint a;
    double alpha;
};
struct Sum {
    std::vector<FunctionPtr> terms;
};
struct Scaled {
    cplx c;
    FunctionPtr inner;
};

using Variant =
    std::variant<Polynomial, LemmaEight, LogKernel, NormalizedLogSquare, PowerKernel, HFamily, PsiFamily, Sum, Scaled>;

}  // namespace fn

class AnalyticFunction {
public:
    template <class T>
        requires std::is_constructible_v<fn::Variant, T&&> && (!std::is_same_v<std::decay_t<T>, AnalyticFunction>)
    AnalyticFunction(T&& v) : v_(std::forward<T>(v)) {  // NOLINT: implicit from any family
        validate();
    }

    const fn::Variant& variant() const { return v_; }

    cplx operator()(cplx z) const { return eval(z); }
    cplx eval(cplx z) const;
    cplx deriv(cplx z) const;
    // Interior points near which f or f' is large (their kernels' poles lie at 1/conj(b)).
    std::vector<cplx> foci() const;

private:
    void validate() const;
    fn::Variant v_;
};

// ---- constructors --------------------------------------------------------------

inline AnalyticFunction polynomial(std::vector<cplx> c) { return fn::Polynomial{std::move(c)}; }
inline AnalyticFunction constant(cplx c) { return polynomial({c}); }
inline AnalyticFunction identity() { return polynomial({0.0, 1.0}); }
inline AnalyticFunction monomial(int k, cplx c = 1.0) {
    std::vector<cplx> v(k + 1, 0.0);
    v[k] = c;
    return polynomial(std::move(v));
}
inline AnalyticFunction lemma_eight(DiskPoint b, double alpha) { return fn::LemmaEight{b, alpha}; }
inline AnalyticFunction log_kernel(DiskPoint b) { return fn::LogKernel{b}; }
inline AnalyticFunction normalized_log_square(DiskPoint w) { return fn::NormalizedLogSquare{w}; }
inline AnalyticFunction power_kernel(DiskPoint b, double gamma, cplx scale = 1.0) {
    return fn::PowerKernel{b, gamma, scale};
}
inline AnalyticFunction h_family(DiskPoint a, double alpha) { return fn::HFamily{a, alpha}; }
inline AnalyticFunction psi_family(DiskPoint a, double alpha) { return fn::PsiFamily{a, alpha}; }
inline AnalyticFunction sum(std::vector<AnalyticFunction> fs) {
    fn::Sum s;
    for (auto& f : fs) s.terms.push_back(std::make_shared<const AnalyticFunction>(std::move(f)));
    return s;
}
inline AnalyticFunction scaled(cplx c, AnalyticFunction f) {
    return fn::Scaled{c, std::make_shared<const AnalyticFunction>(std::move(f))};
}

// ---- implementation ------------------------------------------------------------

namespace detail {
template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline cplx kernel_base(cplx b, cplx z) { return 1.0 - std::conj(b) * z; }
}  // namespace detail

inline void AnalyticFunction::validate() const {
    std::visit(detail::overloaded{
                   [](const fn::Polynomial& p) {
                       if (p.coeffs.size() > kMaxPolyDegree + 1)
                           throw std::invalid_argument("Polynomial: degree exceeds cap " +
                                                       std::to_string(kMaxPolyDegree));
                   },
                   [](const fn::LemmaEight& f) {
                       if (!std::isfinite(f.alpha) || f.alpha <= 0.0)
                           throw std::invalid_argument("LemmaEight: alpha must be > 0");
                   },
                   [](const fn::HFamily& f) {
                       if (!(f.alpha > 0.0)) throw std::invalid_argument("HFamily: alpha must be > 0");
                   },
                   [](const fn::PsiFamily& f) {
                       if (!(f.alpha > 0.0)) throw std::invalid_argument("PsiFamily: alpha must be > 0");
                   },
                   [](const fn::PowerKernel& f) {
                       if (!std::isfinite(f.gamma)) throw std::invalid_argument("PowerKernel: gamma must be finite");
                   },
                   [](const fn::Sum& s) {
                       if (s.terms.empty()) throw std::invalid_argument("Sum: needs at least one term");
                   },
                   [](const auto&) {},
               },
               v_);
}

inline cplx AnalyticFunction::eval(cplx z) const {
    using detail::kernel_base;
    return std::visit(
        detail::overloaded{
            [&](const fn::Polynomial& p) {
                cplx acc = 0.0;
                for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * z + *it;
                return acc;
            },
            [&](const fn::LemmaEight& f) {
                cplx w = kernel_base(f.b, z);
                if (f.alpha == 1.0) return std::log(2.0 / w);
                return std::pow(w, 1.0 - f.alpha) / (1.0 - f.alpha);
            },
            [&](const fn::LogKernel& f) { return std::log(2.0 / kernel_base(f.b, z)); },
            [&](const fn::NormalizedLogSquare& f) {
                cplx L = std::log(2.0 / kernel_base(f.w, z));
                return L * L / std::log(2.0 / (1.0 - std::norm(f.w.value())));
            },
            [&](const fn::PowerKernel& f) { return f.scale * std::pow(kernel_base(f.b, z), -f.gamma); },
            [&](const fn::HFamily& f) {
                const double m = 1.0 - std::norm(f.a.value());
                return m / (f.alpha * std::pow(kernel_base(f.a, z), f.alpha));
            },
            [&](const fn::PsiFamily& f) {
                const double m = 1.0 - std::norm(f.a.value());
                cplx w = kernel_base(f.a, z);
                cplx wa = std::pow(w, -f.alpha);
                return m * wa * (m / w - 1.0);
            },
            [&](const fn::Sum& s) {
                cplx acc = 0.0;
                for (const auto& t : s.terms) acc += t->eval(z);
                return acc;
            },
            [&](const fn::Scaled& s) { return s.c * s.inner->eval(z); },
        },
        v_);
}

inline cplx AnalyticFunction::deriv(cplx z) const {
    using detail::kernel_base;
    return std::visit(
        detail::overloaded{
            [&](const fn::Polynomial& p) {
                cplx acc = 0.0;
                const std::size_t n = p.coeffs.size();
                for (std::size_t k = n; k-- > 1;) acc = acc * z + double(k) * p.coeffs[k];
                return acc;
            },
            [&](const fn::LemmaEight& f) {
                cplx bc = std::conj(f.b.value());
                cplx w = kernel_base(f.b, z);
                if (f.alpha == 1.0) return bc / w;
                // d/dz (1 - conj(b) z)^(1-alpha)/(1-alpha); only its modulus enters the norms
                return -bc * std::pow(w, -f.alpha);
            },
            [&](const fn::LogKernel& f) { return std::conj(f.b.value()) / kernel_base(f.b, z); },
            [&](const fn::NormalizedLogSquare& f) {
                cplx w = kernel_base(f.w, z);
                cplx L = std::log(2.0 / w);
                return 2.0 * L * std::conj(f.w.value()) / w / std::log(2.0 / (1.0 - std::norm(f.w.value())));
            },
            [&](const fn::PowerKernel& f) {
                cplx w = kernel_base(f.b, z);
                return f.scale * f.gamma * std::conj(f.b.value()) * std::pow(w, -f.gamma - 1.0);
            },
            [&](const fn::HFamily& f) {
                const double m = 1.0 - std::norm(f.a.value());
                return std::conj(f.a.value()) * m * std::pow(kernel_base(f.a, z), -f.alpha - 1.0);
            },
            [&](const fn::PsiFamily& f) {
                const double m = 1.0 - std::norm(f.a.value());
                cplx ac = std::conj(f.a.value());
                cplx w = kernel_base(f.a, z);
                cplx wa1 = std::pow(w, -f.alpha - 1.0);
                return ac * m * wa1 * ((f.alpha + 1.0) * m / w - f.alpha);
            },
            [&](const fn::Sum& s) {
                cplx acc = 0.0;
                for (const auto& t : s.terms) acc += t->deriv(z);
                return acc;
            },
            [&](const fn::Scaled& s) { return s.c * s.inner->deriv(z); },
        },
        v_);
}

inline std::vector<cplx> AnalyticFunction::foci() const {
    return std::visit(detail::overloaded{
                          [](const fn::Polynomial&) { return std::vector<cplx>{}; },
                          [](const fn::LemmaEight& f) { return std::vector<cplx>{f.b.value()}; },
                          [](const fn::LogKernel& f) { return std::vector<cplx>{f.b.value()}; },
                          [](const fn::NormalizedLogSquare& f) { return std::vector<cplx>{f.w.value()}; },
                          [](const fn::PowerKernel& f) { return std::vector<cplx>{f.b.value()}; },
                          [](const fn::HFamily& f) { return std::vector<cplx>{f.a.value()}; },
                          [](const fn::PsiFamily& f) { return std::vector<cplx>{f.a.value()}; },
                          [](const fn::Sum& s) {
                              std::vector<cplx> out;
                              for (const auto& t : s.terms) {
                                  auto f = t->foci();
                                  out.insert(out.end(), f.begin(), f.end());
                              }
                              return out;
                          },
                          [](const fn::Scaled& s) { return s.inner->foci(); },
                      },
                      v_);
}

// A map z -> f'(z) for some analytic f, plus the points where it concentrates.
struct DerivativeField {
    std::function<cplx(cplx)> fn;
    std::vector<cplx> foci;

    cplx operator()(cplx z) const { return fn(z); }
};

inline DerivativeField deriv(const AnalyticFunction& f) {
    auto p = std::make_shared<const AnalyticFunction>(f);
    return {[p](cplx z) { return p->deriv(z); }, f.foci()};
}

inline DerivativeField scaled(cplx c, const DerivativeField& d) {
    return {[c, inner = d.fn](cplx z) { return c * inner(z); }, d.foci};
}

// Derivative of f o phi_a: f'(phi_a(z)) phi_a'(z).
inline DerivativeField compose_mobius(const AnalyticFunction& f, DiskPoint a) {
    auto p = std::make_shared<const AnalyticFunction>(f);
    cplx av = a;
    std::vector<cplx> foci{av};
    for (cplx c : f.foci()) foci.push_back(mobius(av, c));
    return {[p, av](cplx z) { return p->deriv(mobius(av, z)) * mobius_deriv(av, z); }, foci};
}

inline std::pair<cplx, cplx> psi_properties(DiskPoint a, double alpha) {
    AnalyticFunction psi = psi_family(a, alpha);
    return {psi.eval(a), psi.deriv(a)};
}

// Zeros of an analytic g in 1e-9 < |z| < 0.9999: Newton (central-difference derivative)
// started from the local minima of |g| on a polar grid.  Used to locate the cone points
// of |g|^p for p not an even integer; a zero at the origin needs no treatment.
inline std::vector<cplx> interior_zeros(const std::function<cplx(cplx)>& g) {
    constexpr int NR = 48, NT = 96;
    const double dr = 0.999 / NR;
    std::vector<double> mag(NR * NT);
    double scale = 0.0;
    auto at = [&](int i, int j) { return std::polar((i + 0.5) * dr, kTwoPi * j / NT); };
    for (int i = 0; i < NR; ++i)
        for (int j = 0; j < NT; ++j) {
            const double v = std::abs(g(at(i, j)));
            mag[i * NT + j] = std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
            if (std::isfinite(v)) scale = std::max(scale, v);
        }
    if (!(scale > 0.0)) return {};
    std::vector<cplx> out;
    const double h = 1e-7;
    for (int i = 0; i < NR; ++i)
        for (int j = 0; j < NT; ++j) {
            const double v = mag[i * NT + j];
            bool is_min = true;
            for (int di = -1; di <= 1 && is_min; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    const int ii = i + di, jj = (j + dj + NT) % NT;
                    if ((di || dj) && ii >= 0 && ii < NR && mag[ii * NT + jj] < v) {
                        is_min = false;
                        break;
                    }
                }
            if (!is_min) continue;
            cplx z = at(i, j);
            bool ok = false;
            for (int it = 0; it < 50; ++it) {
                const cplx gz = g(z);
                const cplx dg = (g(z + h) - g(z - h)) / (2.0 * h);
                if (!std::isfinite(std::abs(gz)) || std::abs(dg) == 0.0) break;
                cplx step = gz / dg;
                if (std::abs(step) > 4.0 * dr) step *= 4.0 * dr / std::abs(step);
                z -= step;
                if (!(std::abs(z) < 0.9999)) break;
                if (std::abs(step) < 1e-13 * std::max(1.0, std::abs(z))) {
                    ok = true;
                    break;
                }
            }
            if (!ok || std::abs(g(z)) > 1e-9 * scale || std::abs(z) <= 1e-9) continue;
            bool dup = false;
            for (cplx w : out)
                if (std::abs(w - z) < 1e-7) dup = true;
            if (!dup) out.push_back(z);
        }
    std::sort(out.begin(), out.end(), [](cplx x, cplx y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    return out;
}

// Whether |w|^p is non-smooth at zeros of w.
inline bool has_cone_points(double p) { return p > 0.0 && !(std::fmod(p, 2.0) == 0.0); }

// Polynomial derivative in coefficient form.
inline std::vector<cplx> derivative_coeffs(const std::vector<cplx>& c) {
    std::vector<cplx> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(double(k) * c[k]);
    return d;
}

}  // namespace fpqs
