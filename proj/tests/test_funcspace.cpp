#include "test_util.hpp"

using namespace fpqs;
using fpqs::testing::random_points;

namespace {

std::vector<std::pair<std::string, AnalyticFunction>> closed_form_families() {
    return {
        {"poly", polynomial({1.0, cplx(0.0, 2.0), -0.5, cplx(0.25, 0.25)})},
        {"lemma8(0.5,2)", lemma_eight(DiskPoint(0.5, 0.0), 2.0)},
        {"lemma8(0.7i,0.5)", lemma_eight(DiskPoint(0.0, 0.7), 0.5)},
        {"log(0.8)", log_kernel(DiskPoint(0.8, 0.0))},
        {"logsq(-0.9)", normalized_log_square(DiskPoint(-0.9, 0.0))},
        {"power(0.95,0.3)", power_kernel(DiskPoint(0.95, 0.0), 0.3, cplx(0.0, 1.0))},
        {"h(0.3+0.4i,1.5)", h_family(DiskPoint(0.3, 0.4), 1.5)},
        {"psi(-0.6i,2)", psi_family(DiskPoint(0.0, -0.6), 2.0)},
        {"sum", sum({identity(), log_kernel(DiskPoint(0.5, 0.0))})},
        {"scaled", scaled(cplx(2.0, -1.0), monomial(3))},
    };
}

}  // namespace

TEST(Eval, Examples) {
    EXPECT_EQ(identity().eval(0.5), cplx(0.5));
    EXPECT_NEAR(std::abs(log_kernel(DiskPoint(0.0)).eval(cplx(0.3, -0.2)) - std::log(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(lemma_eight(DiskPoint(0.5, 0.0), 2.0).eval(0.0) - cplx(-1.0)), 0.0, 1e-15);
}

TEST(Deriv, Examples) {
    EXPECT_NEAR(std::abs(monomial(2).deriv(0.3) - cplx(0.6)), 0.0, 1e-15);
    // exact derivative of (1 - z/2)^(-1)/(1-2) is -(1/2)(1 - z/2)^(-2); modulus 1/2 at the origin
    EXPECT_NEAR(std::abs(lemma_eight(DiskPoint(0.5, 0.0), 2.0).deriv(0.0) - cplx(-0.5)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(log_kernel(DiskPoint(0.8, 0.0)).deriv(0.0) - cplx(0.8)), 0.0, 1e-15);
    auto d = deriv(monomial(2));
    EXPECT_NEAR(std::abs(d(0.3) - cplx(0.6)), 0.0, 1e-15);
}

TEST(PsiProperties, Examples) {
    auto [v0, d0] = psi_properties(DiskPoint(0.0), 1.0);
    EXPECT_EQ(v0, cplx(0.0));
    EXPECT_EQ(d0, cplx(0.0));
    auto [v1, d1] = psi_properties(DiskPoint(0.5, 0.0), 1.0);
    EXPECT_LE(std::abs(v1), 1e-12);
    EXPECT_NEAR(std::abs(d1 - cplx(2.0 / 3.0)), 0.0, 1e-14);
    auto [v2, d2] = psi_properties(DiskPoint(0.0, 0.6), 2.0);
    EXPECT_LE(std::abs(v2), 1e-12);
    EXPECT_LE(std::abs(d2 - cplx(0.0, -0.6) / (0.64 * 0.64)), 1e-13);
}

TEST(FuncspaceProperty, DerivMatchesCentralDifference) {
    const auto pts = random_points(100, 0.9, 21);
    const double h = 1e-5;
    for (const auto& [name, f] : closed_form_families()) {
        for (cplx z : pts) {
            const cplx fd = (f.eval(z + h) - f.eval(z - h)) / (2.0 * h);
            const cplx d = f.deriv(z);
            ASSERT_LE(std::abs(fd - d), 1e-6 * std::max(1.0, std::abs(d))) << name << " at " << z;
        }
    }
}

TEST(FuncspaceProperty, ScaledAndSumArePointwise) {
    const auto pts = random_points(100, 0.95, 22);
    const AnalyticFunction f = log_kernel(DiskPoint(0.0, 0.9));
    const AnalyticFunction g = lemma_eight(DiskPoint(0.5, 0.0), 2.0);
    const cplx c(1.5, -0.5);
    const AnalyticFunction sc = scaled(c, f), sm = sum({f, g});
    for (cplx z : pts) {
        ASSERT_EQ(sc.eval(z), c * f.eval(z));
        ASSERT_EQ(sc.deriv(z), c * f.deriv(z));
        ASSERT_EQ(sm.eval(z), f.eval(z) + g.eval(z));
        ASSERT_EQ(sm.deriv(z), f.deriv(z) + g.deriv(z));
    }
}

TEST(AnalyticFunction, Validation) {
    EXPECT_THROW(polynomial(std::vector<cplx>(kMaxPolyDegree + 2, 1.0)), std::invalid_argument);
    EXPECT_NO_THROW(polynomial(std::vector<cplx>(kMaxPolyDegree + 1, 1.0)));
}

TEST(ComposeMobius, IsChainRule) {
    const AnalyticFunction f = polynomial({0.0, 1.0, 1.0});
    const DiskPoint a(0.3, -0.5);
    const auto d = compose_mobius(f, a);
    const double h = 1e-6;
    for (cplx z : random_points(50, 0.9, 23)) {
        const cplx fd = (f.eval(mobius(a, z + h)) - f.eval(mobius(a, z - h))) / (2.0 * h);
        ASSERT_LE(std::abs(fd - d(z)), 1e-6 * std::max(1.0, std::abs(fd)));
    }
}

TEST(InteriorZeros, FindsPolynomialRoots) {
    const AnalyticFunction f = polynomial({cplx(0.0, -0.15), cplx(-0.5, 0.3), 1.0});  // (z-0.5)(z+0.3i)
    auto zs = interior_zeros([&](cplx z) { return f.eval(z); });
    ASSERT_EQ(zs.size(), 2u);
    bool a = false, b = false;
    for (cplx z : zs) {
        a = a || std::abs(z - cplx(0.5)) < 1e-9;
        b = b || std::abs(z - cplx(0.0, -0.3)) < 1e-9;
    }
    EXPECT_TRUE(a && b);
    EXPECT_TRUE(interior_zeros([](cplx z) { return 1.0 + 0.0 * z; }).empty());
}

TEST(ConePoints, OnlyForNonEvenExponents) {
    EXPECT_FALSE(has_cone_points(2.0));
    EXPECT_FALSE(has_cone_points(4.0));
    EXPECT_TRUE(has_cone_points(1.0));
    EXPECT_TRUE(has_cone_points(0.5));
    EXPECT_TRUE(has_cone_points(3.0));
}
