#include "goedisc/special.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "goedisc/error.hpp"

using namespace goedisc;

TEST(LogGamma, MatchesStandardLibrary) {
    for (double z = 0.05; z < 200.0; z *= 1.13) {
        EXPECT_NEAR(log_gamma(z), std::lgamma(z), 1e-13 * std::max(1.0, std::abs(std::lgamma(z)))) << z;
    }
    EXPECT_EQ(log_gamma(1.0), 0.0);
    EXPECT_EQ(log_gamma(2.0), 0.0);
    EXPECT_NEAR(log_gamma(0.5), 0.5 * std::log(std::numbers::pi), 1e-15);
}

TEST(LogGamma, RejectsNonPositive) {
    EXPECT_THROW(log_gamma(0.0), DomainError);
    EXPECT_THROW(log_gamma(-1.5), DomainError);
    EXPECT_THROW(log_gamma(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

// sqrt(2 pi) z^{z-1/2} e^{-z} <= Gamma(z) <= e^{1/12} sqrt(2 pi) z^{z-1/2} e^{-z}
TEST(LogGamma, StirlingSandwich) {
    for (double z : {1.0, 2.5, 10.0, 100.0}) {
        const double stirling = 0.5 * std::log(2.0 * std::numbers::pi) + (z - 0.5) * std::log(z) - z;
        EXPECT_LE(stirling, log_gamma(z));
        EXPECT_LE(log_gamma(z), stirling + 1.0 / 12.0);
    }
}

TEST(LogBinomial, ExactSmallValues) {
    std::uint64_t c = 1;
    for (int k = 0; k <= 30; ++k) {
        EXPECT_NEAR(log_binomial(30, k), std::log(static_cast<double>(c)), 1e-12) << k;
        c = c * static_cast<std::uint64_t>(30 - k) / static_cast<std::uint64_t>(k + 1);
    }
    EXPECT_THROW(log_binomial(5, 6), DomainError);
    EXPECT_THROW(log_binomial(5, -1), DomainError);
}

TEST(LogSumExp, HandlesInfinitiesAndScale) {
    const double inf = std::numeric_limits<double>::infinity();
    EXPECT_EQ(log_add_exp(-inf, -inf), -inf);
    EXPECT_EQ(log_add_exp(-inf, 3.0), 3.0);
    EXPECT_NEAR(log_add_exp(1000.0, 1000.0), 1000.0 + std::numbers::ln2, 1e-12);
    EXPECT_EQ(log_sum_exp(std::vector<double>{}), -inf);
    EXPECT_NEAR(log_sum_exp(std::vector<double>{-800.0, -800.0, -800.0, -800.0}), -800.0 + std::log(4.0), 1e-12);
}

TEST(LogSumExp, PartitionIndependentOfCallerOrderWithinReduction) {
    std::vector<double> v;
    for (int i = 0; i < 101; ++i) v.push_back(std::sin(i) * 30.0);
    const double all = log_sum_exp(v);
    double direct = 0.0;
    for (double x : v) direct += std::exp(x);
    EXPECT_NEAR(all, std::log(direct), 1e-13 * std::abs(all));
    EXPECT_EQ(all, log_sum_exp(v));
}
