#pragma once
// Geometry of the unit disk: Möbius maps, the hyperbolic metric, boundary arcs,
// Carleson boxes, dyadic arc families and r-lattices.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpqs {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Point of the open unit disk. Construction with |z| >= 1 throws.
class DiskPoint {
public:
    DiskPoint() = default;
    DiskPoint(double re, double im) : z_(re, im) { check(); }
    DiskPoint(cplx z) : z_(z) { check(); }  // NOLINT: implicit on purpose

    double re() const { return z_.real(); }
    double im() const { return z_.imag(); }
    cplx value() const { return z_; }
    operator cplx() const { return z_; }  // NOLINT
    double modulus() const { return std::abs(z_); }

    friend bool operator==(const DiskPoint& a, const DiskPoint& b) { return a.z_ == b.z_; }

private:
    void check() const {
        if (!(std::norm(z_) < 1.0) || !std::isfinite(z_.real()) || !std::isfinite(z_.imag()))
            throw std::invalid_argument("DiskPoint: modulus must be < 1");
    }
    cplx z_{0.0, 0.0};
};

// Wraps x into [0,1).
inline double wrap_unit(double x) {
    double r = x - std::floor(x);
    return r >= 1.0 ? 0.0 : r;
}

// Angle of z as a fraction of the circle, in [0,1).
inline double angle_fraction(cplx z) { return wrap_unit(std::arg(z) / kTwoPi); }

// Circular distance between two fractions, in [0, 1/2].
inline double circular_distance(double s, double t) {
    double d = wrap_unit(s - t);
    return d > 0.5 ? 1.0 - d : d;
}

// Boundary arc; angles are fractions of the circle so that |dD| = 1.
struct Arc {
    double center = 0.0;  // in [0,1)
    double length = 1.0;  // in (0,1]

    Arc() = default;
    Arc(double c, double l) : center(wrap_unit(c)), length(l) {
        if (!(l > 0.0 && l <= 1.0)) throw std::invalid_argument("Arc: length must lie in (0,1]");
    }
    double lo() const { return center - 0.5 * length; }
    double hi() const { return center + 0.5 * length; }
    // Closed arc membership for a boundary fraction t.
    bool contains(double t) const {
        return length >= 1.0 || circular_distance(t, center) <= 0.5 * length;
    }
};

struct CarlesonBox {
    Arc arc;
    // 1 - |z|^2 ranges over (0, u_max()] inside the box.
    double u_max() const {
        double l = arc.length;
        return l * (2.0 - l);
    }
    // Strict membership {1-|I| < |z| < 1, z/|z| in I}.
    bool contains(cplx z) const {
        double m = std::abs(z);
        if (!(m < 1.0) || !(m > 1.0 - arc.length) || m == 0.0) return false;
        return arc.contains(angle_fraction(z));
    }
    // Closed version used for atoms: an atom on the box boundary counts as inside.
    // The origin is never inside.
    bool contains_closed(cplx z) const {
        double m = std::abs(z);
        if (m == 0.0 || !(m >= 1.0 - arc.length)) return false;
        return arc.contains(angle_fraction(z));
    }
    // Normalized area of the box: |I| (2|I| - |I|^2).
    double area() const { return arc.length * u_max(); }
};

struct SpaceParams {
    double p = 2.0;
    double alpha = 1.0;
    double s = 1.0;

    SpaceParams() = default;
    SpaceParams(double p_, double alpha_, double s_) : p(p_), alpha(alpha_), s(s_) {
        if (!(p > 0.0)) throw std::invalid_argument("SpaceParams: p must be > 0");
        if (!(alpha > 0.0)) throw std::invalid_argument("SpaceParams: alpha must be > 0");
        if (!(s >= 0.0)) throw std::invalid_argument("SpaceParams: s must be >= 0");
        if (!(s + p * alpha > 1.0)) throw std::invalid_argument("SpaceParams: need s + p*alpha > 1");
    }
    double q() const { return p * alpha - 2.0; }
};

// phi_a(z) = (a - z) / (1 - conj(a) z)
inline cplx mobius(cplx a, cplx z) { return (a - z) / (1.0 - std::conj(a) * z); }

inline DiskPoint mobius_map(DiskPoint a, DiskPoint z) {
    cplx w = mobius(a, z);
    // rounding can push |w| to 1 for points extremely close to the boundary
    if (!(std::norm(w) < 1.0)) w *= std::nextafter(1.0, 0.0) / std::abs(w);
    return DiskPoint(w);
}

inline cplx mobius_deriv(cplx a, cplx z) {
    cplx d = 1.0 - std::conj(a) * z;
    return -(1.0 - std::norm(a)) / (d * d);
}

// 1 - |phi_a(z)|^2 in the cancellation-free form.
inline double one_minus_phi_sq(cplx a, cplx z) {
    return (1.0 - std::norm(z)) * (1.0 - std::norm(a)) / std::norm(1.0 - std::conj(a) * z);
}

inline double pseudo_distance(cplx z, cplx w) { return std::abs(z - w) / std::abs(1.0 - std::conj(z) * w); }

// beta(z,w) = atanh |phi_z(w)|, so beta(0,t) = (1/2) log((1+t)/(1-t)).
inline double bergman_distance(cplx z, cplx w) {
    double rho = pseudo_distance(z, w);
    if (rho >= 1.0) rho = std::nextafter(1.0, 0.0);
    return std::atanh(rho);
}

inline constexpr int kMaxDyadicDepth = 24;

// Arcs of length 2^-k centred at j 2^-k (first grid) and (j+1/2) 2^-k (shifted grid),
// k = 0..max_depth; the two grids coincide at k = 0.  Count: 2^(max_depth+2) - 3.
inline std::vector<Arc> dyadic_arcs(int max_depth) {
    if (max_depth < 0 || max_depth > kMaxDyadicDepth)
        throw std::invalid_argument("dyadic_arcs: depth must lie in [0, " + std::to_string(kMaxDyadicDepth) + "]");
    std::vector<Arc> out;
    out.reserve((std::size_t(1) << (max_depth + 2)));
    out.emplace_back(0.0, 1.0);
    for (int k = 1; k <= max_depth; ++k) {
        const std::uint64_t n = std::uint64_t(1) << k;
        const double len = std::ldexp(1.0, -k);
        for (std::uint64_t j = 0; j < n; ++j) out.emplace_back(double(j) * len, len);
        for (std::uint64_t j = 0; j < n; ++j) out.emplace_back((double(j) + 0.5) * len, len);
    }
    return out;
}

inline int arc_depth(const Arc& a) { return int(std::lround(-std::log2(a.length))); }

// Rings at hyperbolic radii k r/2, each carrying the largest equiangular set whose
// neighbours stay r/2 apart.  Consecutive rings are r/2 apart, so every point is within
// r/2 (radially) + r/4 (angularly) < r of a lattice point.
inline std::vector<DiskPoint> build_r_lattice(double r, double radius_cap) {
    if (!(r > 0.0 && r <= 2.0)) throw std::invalid_argument("build_r_lattice: r must lie in (0,2]");
    if (!(radius_cap > 0.0 && radius_cap < 1.0))
        throw std::invalid_argument("build_r_lattice: radius_cap must lie in (0,1)");
    const double half = 0.5 * r;
    const double beta_cap = std::atanh(radius_cap);
    std::vector<DiskPoint> pts{DiskPoint(0.0, 0.0)};
    for (int k = 1;; ++k) {
        const double beta_k = k * half;
        const double t = std::tanh(beta_k);
        if (!(t < 1.0)) break;
        auto sep = [&](long n) {
            return bergman_distance(cplx(t, 0.0), std::polar(t, kTwoPi / double(n)));
        };
        long n = long(std::ceil(std::numbers::pi * std::sinh(2.0 * beta_k) / half)) + 2;
        while (n > 1 && sep(n) < half) --n;
        for (long j = 0; j < n; ++j) pts.emplace_back(std::polar(t, kTwoPi * double(j) / double(n)));
        if (beta_k >= beta_cap - 0.5 * half) break;
    }
    return pts;
}

inline int covering_multiplicity(const std::vector<DiskPoint>& lattice, double R,
                                 const std::vector<DiskPoint>& probe) {
    if (!(R > 0.0)) throw std::invalid_argument("covering_multiplicity: R must be > 0");
    if (probe.empty()) throw std::invalid_argument("covering_multiplicity: empty probe list");
    int best = 0;
    for (const auto& z : probe) {
        int c = 0;
        for (const auto& a : lattice)
            if (bergman_distance(a, z) < R) ++c;
        best = std::max(best, c);
    }
    return best;
}

}  // namespace fpqs
