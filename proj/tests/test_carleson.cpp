#include "test_util.hpp"

using namespace fpqs;
using fpqs::testing::rel_err;

TEST(CarlesonConstant, AreaPerArcAndSup) {
    const MeasureForm form = normal_form(area_measure());
    for (const auto& I : dyadic_arcs(8)) {
        auto r = integrate_measure(form, [](cplx) { return 1.0; }, Region::of(CarlesonBox{I}), 0.0, {});
        ASSERT_NEAR(r.value / (I.length * I.length), 2.0 - I.length, 1e-10);
    }
    auto c = carleson_constant(area_measure(), 2.0, 12);
    EXPECT_GE(c.value, 1.98);
    EXPECT_LE(c.value, 2.0);
    EXPECT_LE(rel_err(c.value, 1.999755859375), 1e-9);
}

TEST(CarlesonConstant, AtomAtOriginIsInNoBox) {
    EXPECT_EQ(carleson_constant(atomic({{DiskPoint(0.0), 1.0}}), 1.0, 8).value, 0.0);
}

TEST(CarlesonConstant, WrongExponentGrowsLikeHalfPower) {
    const double sigma = 1.5;
    auto rep = carleson_constant(power_density(sigma), sigma + 0.5, 12);
    std::vector<double> x, y;
    for (const auto& [k, v] : rep.profile)
        if (k >= 4) {
            x.push_back(k);
            y.push_back(std::log2(v));
        }
    EXPECT_NEAR(fit_slope(x, y).slope, 0.5, 0.1);
    auto ok = carleson_constant(power_density(sigma), sigma, 12);
    double mx = 0, mn = 1e300;
    for (const auto& [k, v] : ok.profile) {
        mx = std::max(mx, v);
        mn = std::min(mn, v);
    }
    EXPECT_LT(mx / mn, 4.0);
}

TEST(LogCarleson, PZeroIsBitIdentical) {
    for (const MeasureSpec& mu : {area_measure(), log_power_density(1.0, 2.0)}) {
        auto a = log_carleson_constant(mu, 0.0, 1.0, 8);
        auto b = carleson_constant(mu, 1.0, 8);
        EXPECT_EQ(a.value, b.value);
        EXPECT_EQ(a.raw_value, b.raw_value);
        ASSERT_EQ(a.profile.size(), b.profile.size());
        for (std::size_t i = 0; i < a.profile.size(); ++i) EXPECT_EQ(a.profile[i], b.profile[i]);
    }
}

TEST(LogCarleson, WitnessBoundedAndPowerDensityGrowsLikeLogPower) {
    const double p = 2.0, s = 1.0;
    auto w = log_carleson_constant(log_power_density(s, p), p, s, 12);
    double mx = 0, mn = 1e300;
    for (const auto& [k, v] : w.profile)
        if (k >= 2) {
            mx = std::max(mx, v);
            mn = std::min(mn, v);
        }
    EXPECT_LT(mx / mn, 2.0);
    auto g = log_carleson_constant(power_density(s), p, s, 12);
    std::vector<double> x, y;
    for (const auto& [k, v] : g.profile)
        if (k >= 4) {
            x.push_back(std::log(std::log(2.0) * (k + 1)));
            y.push_back(std::log(v));
        }
    EXPECT_NEAR(fit_slope(x, y).slope, p, 0.2);
}

TEST(BlascoConstant, Examples) {
    auto m = blasco_constant(atomic({{DiskPoint(0.0), 2.5}}), 0.0, 1.0, 1.0);
    EXPECT_NEAR(m.value, 2.5, 1e-12);
    // brute_force.py: blasco_atom(0.5, 1) at (s,t)
    const double want[3][3] = {{1, 1, 1.33333333333333}, {2, 1, 1.87787714748656}, {0.5, 2, 1.24637310863398}};
    const MeasureSpec atom = atomic({{DiskPoint(0.5, 0.0), 1.0}});
    for (const auto& w : want) EXPECT_LE(rel_err(blasco_constant(atom, 0.0, w[0], w[1]).value, w[2]), 1e-5) << w[0];
}

TEST(VanishingProfile, Examples) {
    auto atom = vanishing_profile(atomic({{DiskPoint(0.5, 0.0), 1.0}}), 0.0, 1.0, 8);
    for (const auto& [k, v] : atom)
        if (k >= 2) EXPECT_EQ(v, 0.0) << k;
    const double s = 1.0;
    auto dec = vanishing_profile(power_density(s + 1.0), 0.0, s, 12);
    std::vector<double> x, y;
    for (const auto& [k, v] : dec)
        if (k >= 4) {
            x.push_back(k);
            y.push_back(std::log2(v));
        }
    EXPECT_NEAR(fit_slope(x, y).slope, -1.0, 0.2);
}

TEST(KernelPair, OriginGivesReciprocal) {
    for (double s : {0.0, 0.5, 1.0}) {
        auto r = lemma6_estimate(DiskPoint(0.0), DiskPoint(0.0), s, 2.0, 2.0);
        EXPECT_LE(rel_err(r.value, 1.0 / (s + 1.0)), 1e-10);
    }
    EXPECT_EQ(lemma6_estimate(DiskPoint(0.0), DiskPoint(0.0), 0.0, 2.0, 1.5).regime, "boundary");
    EXPECT_TRUE(std::isnan(lemma6_estimate(DiskPoint(0.0), DiskPoint(0.0), 0.0, 2.0, 1.5).bound));
}

TEST(KernelPair, KernelPairMatchesMpmath) {
    // kernel_pair.py: mpmath 2-D quadrature
    struct C {
        double a, b, s, r, t, want;
    } cases[] = {{0.956, 0.999, 0.5, 1, 2, 11.4799904363046},
                 {0.9, 0.99, 0.5, 1, 2, 5.54472183370529},
                 {0.99, 0.999, 0.5, 1, 2, 21.912369335931},
                 {0.5, 0.9, 0, 1, 3, 10.3798972231104}};
    for (const auto& c : cases)
        EXPECT_LE(rel_err(kernel_pair_integral(c.a, c.b, c.s, c.r, c.t).value, c.want), 1e-9) << c.a << "," << c.b;
}

TEST(KernelPair, SymmetricWhenExponentsMatch) {
    for (auto [a, b] : {std::pair<cplx, cplx>{0.3, cplx(0.0, 0.8)}, {cplx(-0.5, 0.5), 0.9}}) {
        auto x = lemma6_estimate(DiskPoint(a), DiskPoint(b), 0.0, 1.5, 1.5);
        auto y = lemma6_estimate(DiskPoint(b), DiskPoint(a), 0.0, 1.5, 1.5);
        EXPECT_LE(rel_err(x.value, y.value), 1e-8);
    }
}

TEST(WeightedKernel, OriginAndWindow) {
    EXPECT_LE(rel_err(cor7_check(DiskPoint(0.0), DiskPoint(0.0), 0.8, 1.6, 2.0), 1.0 / 1.8), 1e-10);
    EXPECT_THROW(cor7_check(DiskPoint(0.0), DiskPoint(0.0), 0.0, 1.0, 1.0), std::invalid_argument);
}

TEST(CarlesonProperty, AddingAnAtomNeverDecreases) {
    const MeasureSpec base = atomic({{DiskPoint(0.0, 0.7), 1.0}});
    const double c0 = carleson_constant(base, 1.0, 8).value;
    std::mt19937_64 rng(41);
    for (cplx z : fpqs::testing::random_points(20, 0.99, 42)) {
        const MeasureSpec more = atomic({{DiskPoint(0.0, 0.7), 1.0}, {DiskPoint(z), 0.3}});
        ASSERT_GE(carleson_constant(more, 1.0, 8).value, c0);
    }
}

TEST(CarlesonProperty, RestrictionNeverIncreases) {
    const MeasureSpec mu = log_power_density(1.0, 1.0);
    const double c = carleson_constant(mu, 1.0, 8).value;
    for (double r : {0.3, 0.7, 0.95}) EXPECT_LE(carleson_constant(restrict(mu, r), 1.0, 8).value, c * (1.0 + 1e-12));
}
