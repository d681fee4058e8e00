#include "test_util.hpp"

using namespace fpqs;
using fpqs::testing::random_points;
using fpqs::testing::rel_err;

namespace {

std::vector<cplx> random_coeffs(std::mt19937_64& rng, int deg) {
    std::normal_distribution<double> N(0.0, 1.0);
    std::vector<cplx> c(deg + 1);
    for (auto& x : c) x = cplx(N(rng), N(rng));
    return c;
}

}  // namespace

TEST(Jg, Examples) {
    auto f1 = jg_deriv(constant(1.0), identity());
    EXPECT_EQ(f1(cplx(0.3, 0.2)), cplx(1.0));
    const auto c = poly_coeffs(jg_poly(identity(), monomial(2)));
    ASSERT_EQ(c.size(), 4u);
    EXPECT_NEAR(std::abs(c[3] - cplx(2.0 / 3.0)), 0.0, 1e-15);
    EXPECT_EQ(c[0], cplx(0.0));
    // value recovery by radial path integration vs the closed form J_g f for g = z
    const AnalyticFunction f = log_kernel(DiskPoint(0.7, 0.0));
    auto field = jg_deriv(f, identity());
    const double h = 1e-5;
    for (cplx z : random_points(20, 0.9, 51)) {
        const cplx fd = (antiderivative_value(field, z + h) - antiderivative_value(field, z - h)) / (2.0 * h);
        ASSERT_LE(std::abs(fd - f.eval(z)), 1e-6 * std::abs(f.eval(z)));
    }
}

TEST(Ig, Examples) {
    EXPECT_EQ(ig_deriv(identity(), constant(1.0))(cplx(0.4, -0.1)), cplx(1.0));
    const cplx z(0.3, 0.5);
    EXPECT_NEAR(std::abs(ig_deriv(monomial(2), identity())(z) - 2.0 * z * z), 0.0, 1e-15);
    const AnalyticFunction g = log_kernel(DiskPoint(0.5, 0.0));
    const AnalyticFunction f = polynomial({0.0, 1.0, 2.0}), fc = polynomial({7.0, 1.0, 2.0});
    for (cplx w : random_points(20, 0.9, 52)) ASSERT_EQ(ig_deriv(f, g)(w), ig_deriv(fc, g)(w));
}

TEST(Mg, Examples) {
    const cplx z(0.2, -0.6);
    EXPECT_NEAR(std::abs(mg_deriv(identity(), identity())(z) - 2.0 * z), 0.0, 1e-15);
    for (double a : {0.3, 0.7}) {
        const cplx av(0.0, a);
        const AnalyticFunction psi = psi_family(DiskPoint(av), 1.0);
        const AnalyticFunction g = polynomial({1.0, cplx(0.0, 2.0), -0.5});
        const cplx lhs = mg_deriv(psi, g)(av), rhs = g.eval(av) * psi.deriv(av);
        EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::abs(rhs));
    }
}

TEST(Operators, DegreeCapInCoefficientMode) {
    std::vector<cplx> big(200, 1.0);
    EXPECT_THROW(mg_poly(polynomial(big), polynomial(big)), std::invalid_argument);
    EXPECT_THROW(jg_poly(log_kernel(DiskPoint(0.5, 0.0)), identity()), std::invalid_argument);
}

TEST(OperatorsProperty, ProductRuleDecomposition) {
    std::mt19937_64 rng(61);
    const std::vector<AnalyticFunction> extra = {log_kernel(DiskPoint(0.0, 0.9)), lemma_eight(DiskPoint(0.5, 0.0), 2.0)};
    for (int i = 0; i < 20; ++i) {
        const AnalyticFunction f = i < 2 ? extra[i] : polynomial(random_coeffs(rng, 8));
        const AnalyticFunction g = polynomial(random_coeffs(rng, 8));
        for (cplx z : random_points(64, 0.95, 62 + i)) {
            const cplx m = mg_deriv(f, g)(z), d = ig_deriv(f, g)(z) + jg_deriv(f, g)(z);
            ASSERT_LE(std::abs(m - d), 1e-12 * std::max(1.0, std::abs(m)));
        }
    }
}

TEST(OperatorsProperty, CoefficientPathMatchesPointwise) {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> deg(0, 16);
    for (int i = 0; i < 20; ++i) {
        const AnalyticFunction f = polynomial(random_coeffs(rng, deg(rng)));
        const AnalyticFunction g = polynomial(random_coeffs(rng, deg(rng)));
        const AnalyticFunction jp = jg_poly(f, g), ip = ig_poly(f, g), mp = mg_poly(f, g);
        for (cplx z : random_points(64, 0.99, 72 + i)) {
            auto close = [](cplx a, cplx b) { return std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(b)); };
            ASSERT_TRUE(close(jp.deriv(z), jg_deriv(f, g)(z)));
            ASSERT_TRUE(close(ip.deriv(z), ig_deriv(f, g)(z)));
            ASSERT_TRUE(close(mp.deriv(z), mg_deriv(f, g)(z)));
            ASSERT_TRUE(close(mp.eval(z), f.eval(z) * g.eval(z)));
        }
    }
}

TEST(OperatorsProperty, LinearInF) {
    std::mt19937_64 rng(81);
    const AnalyticFunction g = log_kernel(DiskPoint(0.3, 0.6));
    for (int i = 0; i < 10; ++i) {
        const AnalyticFunction f = polynomial(random_coeffs(rng, 6)), h = polynomial(random_coeffs(rng, 6));
        const cplx lam(std::normal_distribution<double>()(rng), 0.5);
        const AnalyticFunction comb = sum({f, scaled(lam, h)});
        for (cplx z : random_points(32, 0.95, 82 + i)) {
            for (auto op : {OperatorKind::Jg, OperatorKind::Ig, OperatorKind::Mg}) {
                const cplx want = operator_field(op, f, g)(z) + lam * operator_field(op, h, g)(z);
                ASSERT_LE(std::abs(operator_field(op, comb, g)(z) - want), 1e-12 * std::max(1.0, std::abs(want)));
            }
        }
    }
}

TEST(EmbeddingRatio, ZeroMeasureGivesZeroRatios) {
    auto rep = embedding_ratio(standard_battery(1.0), zero_measure(), SpaceParams(2.0, 1.0, 1.0), 4);
    ASSERT_EQ(rep.entries.size(), 8u);
    for (const auto& e : rep.entries) EXPECT_EQ(e.ratio, 0.0) << e.label;
    EXPECT_EQ(rep.max_ratio, 0.0);
}

TEST(EmbeddingRatio, RejectsZeroNormMember) {
    Battery b{{"zero", constant(0.0)}};
    EXPECT_THROW(embedding_ratio(b, area_measure(), SpaceParams(2.0, 1.0, 1.0), 2), std::invalid_argument);
    EXPECT_THROW(embedding_ratio({}, area_measure(), SpaceParams(2.0, 1.0, 1.0), 2), std::invalid_argument);
}

TEST(OperatorReport, ConstantSymbol) {
    const SpaceParams P(2.0, 1.0, 1.0);
    Battery bat{{"z", identity()}, {"z^3", monomial(3)}, {"lemma8-shift", sum({lemma_eight(DiskPoint(0.0, 0.5), 2.0), constant(1.0)})}};
    const cplx c(0.0, 2.0);
    auto jg = operator_boundedness_report(constant(c), P, OperatorKind::Jg, bat, 4);
    for (const auto& e : jg.entries) EXPECT_EQ(e.ratio, 0.0);
    // f(0) = 0 for every member, so I_c f = c f and the ratio is |c|
    auto ig = operator_boundedness_report(constant(c), P, OperatorKind::Ig, bat, 4);
    for (const auto& e : ig.entries) EXPECT_LE(rel_err(e.ratio, 2.0), 1e-9) << e.label;
    EXPECT_TRUE(ig.flag.empty());
}

TEST(OperatorReport, FlagsUncharacterizedRegime) {
    // alpha > 1, p > 2, gamma = s + p(alpha-1) = 1
    const SpaceParams P(3.0, 1.2, 0.4);
    Battery bat{{"z", identity()}};
    auto rep = operator_boundedness_report(identity(), P, OperatorKind::Jg, bat, 2);
    EXPECT_FALSE(rep.flag.empty());
}

TEST(OperatorsProperty, BatteryMonotonicity) {
    const SpaceParams P(2.0, 1.0, 1.0);
    const AnalyticFunction g = log_kernel(DiskPoint(0.5, 0.0));
    Battery small{{"z", identity()}, {"z^3", monomial(3)}};
    Battery big = small;
    big.push_back({"log(0.5i)", log_kernel(DiskPoint(0.0, 0.5))});
    auto a = operator_boundedness_report(g, P, OperatorKind::Mg, small, 2);
    auto b = operator_boundedness_report(g, P, OperatorKind::Mg, big, 2);
    EXPECT_GE(b.max_ratio, a.max_ratio);
}
