#include "test_util.hpp"

using namespace fpqs;
using fpqs::testing::rel_err;

TEST(IntegrateDisk, WeightIntegrals) {
    // closed_forms.py: weight_integral(beta) = 1/(1+beta)
    for (double beta : {-0.5, 0.0, 0.5, 2.0, 4.5}) {
        auto r = integrate_disk([](cplx) { return 1.0; }, beta);
        EXPECT_LE(rel_err(r.value, 1.0 / (1.0 + beta)), 1e-8) << beta;
        EXPECT_TRUE(r.converged);
    }
}

TEST(IntegrateDisk, SecondMoment) {
    auto r = integrate_disk([](cplx z) { return std::norm(z); }, 0.0);
    EXPECT_NEAR(r.value, 0.5, 1e-12);
}

TEST(IntegrateDisk, NearSingularKernel) {
    // closed_forms.py: kernel_sq_integral(0.9) = log(1/0.19)/0.81
    const double want = 2.0502854405205567;
    auto r = integrate_disk([](cplx z) { return 1.0 / std::norm(1.0 - 0.9 * z); }, 0.0, {}, {cplx(0.9)});
    EXPECT_LE(rel_err(r.value, want), 1e-8);
    EXPECT_TRUE(r.converged);
}

TEST(IntegrateDisk, RejectsNonIntegrableWeight) {
    EXPECT_THROW(integrate_disk([](cplx) { return 1.0; }, -1.0), std::invalid_argument);
    QuadratureSpec bad;
    bad.radial_nodes = 4;
    EXPECT_THROW(integrate_disk([](cplx) { return 1.0; }, 0.0, bad), std::invalid_argument);
}

TEST(IntegrateBox, Areas) {
    EXPECT_NEAR(integrate_box([](cplx) { return 1.0; }, CarlesonBox{Arc(0.0, 0.5)}, 0.0).value, 0.375, 1e-13);
    EXPECT_NEAR(integrate_box([](cplx) { return 1.0; }, CarlesonBox{Arc(0.3, 1.0)}, 0.0).value, 1.0, 1e-13);
}

TEST(IntegrateBox, MatchesIndicatorOnDisk) {
    // |f_a|^2 with f_a = (1 - 0.9 z)^-1 over a box around angle 0 vs the plain disk rule
    // with an indicator (slow but independent of the box layout).
    const CarlesonBox box{Arc(0.05, 0.25)};
    auto f = [](cplx z) { return 1.0 / std::norm(1.0 - 0.9 * z); };
    auto boxed = integrate_box(f, box, 0.0, {}, {cplx(0.9)});
    QuadratureSpec big;
    big.radial_nodes = 512;
    big.angular_nodes = 2048;
    big.refinement_levels = 1;
    auto ind = integrate_disk([&](cplx z) { return box.contains(z) ? f(z) : 0.0; }, 0.0, big);
    EXPECT_LE(rel_err(boxed.value, ind.value), 1e-2);
}

TEST(QuadratureProperty, RefinementShrinksErrorEstimate) {
    auto f = [](cplx z) { return 1.0 / std::norm(1.0 - 0.6 * z); };
    QuadratureSpec s1;
    s1.radial_nodes = 8;
    s1.angular_nodes = 16;
    s1.refinement_levels = 2;
    QuadratureSpec s2 = s1;
    s2.radial_nodes = 16;
    s2.angular_nodes = 32;
    auto r1 = integrate_disk(f, 0.0, s1), r2 = integrate_disk(f, 0.0, s2);
    EXPECT_LT(r2.error_estimate, r1.error_estimate);
}

TEST(QuadratureProperty, Linearity) {
    auto f = [](cplx z) { return std::norm(1.0 + z); };
    auto g = [](cplx z) { return 1.0 / std::norm(1.0 - cplx(0.0, 0.7) * z); };
    const double c = 2.5;
    auto rf = integrate_disk(f, 0.5, {}, {cplx(0.0, 0.7)});
    auto rg = integrate_disk(g, 0.5, {}, {cplx(0.0, 0.7)});
    auto rs = integrate_disk([&](cplx z) { return c * f(z) + g(z); }, 0.5, {}, {cplx(0.0, 0.7)});
    const double tol = c * rf.error_estimate + rg.error_estimate + rs.error_estimate + 1e-12;
    EXPECT_LE(std::abs(rs.value - (c * rf.value + rg.value)), tol);
}

// Plain tensor Gauss rule on the polar rectangle rlo<|z|<rhi, t in [tlo,thi] (dA normalized).
template <class F>
double polar_rect(F&& f, double rlo, double rhi, double tlo, double thi) {
    auto g = gauss::legendre_unit(64);
    double acc = 0.0;
    for (std::size_t i = 0; i < g->x.size(); ++i)
        for (std::size_t j = 0; j < g->x.size(); ++j) {
            const double r = rlo + (rhi - rlo) * g->x[i], t = tlo + (thi - tlo) * g->x[j];
            acc += g->w[i] * g->w[j] * f(std::polar(r, kTwoPi * t)) * r;
        }
    return acc * (rhi - rlo) * (thi - tlo) * 2.0;
}

TEST(QuadratureProperty, BoxAdditivity) {
    // S(I) = S(I_left) + S(I_right) + the sector 1-|I| < |z| <= 1-|I|/2 over I
    auto f = [](cplx z) { return std::norm(z - 0.3) + 1.0; };
    for (double len : {0.5, 0.125}) {
        const double c = 0.2;
        CarlesonBox whole{Arc(c, len)};
        CarlesonBox left{Arc(c - 0.25 * len, 0.5 * len)}, right{Arc(c + 0.25 * len, 0.5 * len)};
        auto w = integrate_box(f, whole, 0.0);
        auto l = integrate_box(f, left, 0.0), r = integrate_box(f, right, 0.0);
        const double sector = polar_rect(f, 1.0 - len, 1.0 - 0.5 * len, c - 0.5 * len, c + 0.5 * len);
        const double tol = 2.0 * (w.error_estimate + l.error_estimate + r.error_estimate) + 1e-12;
        EXPECT_LE(std::abs(w.value - (l.value + r.value + sector)), tol) << len;
    }
}

TEST(QuadratureProperty, Positivity) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> U(-0.95, 0.95);
    for (int i = 0; i < 20; ++i) {
        const cplx b(U(rng) * 0.7, U(rng) * 0.7);
        auto r = integrate_disk([&](cplx z) { return 1.0 / std::norm(1.0 - std::conj(b) * z); }, U(rng));
        ASSERT_GE(r.value, 0.0);
    }
}
