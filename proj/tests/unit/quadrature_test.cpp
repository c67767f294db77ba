#include "goedisc/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "goedisc/error.hpp"

using namespace goedisc;

TEST(Quadrature, PolynomialsAreExact) {
    EXPECT_NEAR(integrate([](double x) { return x * x * x - 2.0 * x + 1.0; }, -1.0, 3.0), 20.0 - 8.0 + 4.0, 1e-12);
    EXPECT_EQ(integrate([](double) { return 1.0; }, 2.0, 2.0), 0.0);
}

TEST(Quadrature, GaussianAgainstErf) {
    const double v = integrate([](double x) { return std::exp(-x * x); }, -0.5, 2.0, {0.0, 1e-13, 2000});
    const double expected = 0.5 * std::sqrt(std::numbers::pi) * (std::erf(2.0) + std::erf(0.5));
    EXPECT_NEAR(v, expected, 1e-13 * expected);
}

TEST(Quadrature, EndpointSingularityConverges) {
    const QuadratureResult r = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {1e-9, 1e-9, 2000});
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, 2.0, 1e-8);
}

TEST(Quadrature, ReversedIntervalFlipsSign) {
    auto f = [](double x) { return std::cos(x); };
    EXPECT_NEAR(integrate(f, 1.0, 0.0), -std::sin(1.0), 1e-14);
}

TEST(Quadrature, SharpPeakNeedsSubdivision) {
    const QuadratureResult r =
        integrate_adaptive([](double x) { return std::exp(-1e6 * (x - 0.3) * (x - 0.3)); }, 0.0, 1.0, {0.0, 1e-10, 2000});
    EXPECT_TRUE(r.converged);
    EXPECT_GT(r.intervals, 4);
    EXPECT_NEAR(r.value, std::sqrt(std::numbers::pi / 1e6), 1e-10 * r.value);
}

TEST(Quadrature, BudgetExhaustionReportsEstimate) {
    auto f = [](double x) { return 1.0 / x; };
    try {
        integrate(f, 0.0, 1.0, {1e-12, 1e-12, 20});
        FAIL() << "expected AccuracyNotMetError";
    } catch (const AccuracyNotMetError& e) {
        EXPECT_TRUE(std::isfinite(e.estimate()));
        EXPECT_GT(e.error_estimate(), 0.0);
    }
}
