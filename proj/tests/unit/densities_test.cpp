#include "goedisc/densities.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "goedisc/eigen.hpp"
#include "goedisc/error.hpp"
#include "goedisc/quadrature.hpp"
#include "goedisc/rmt.hpp"

using namespace goedisc;

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double ordered_mass(std::function<double(double, double)> f, double lo, double hi, double rel) {
    return integrate_adaptive(
               [&](double x) {
                   return integrate_adaptive([&](double y) { return f(x, y); }, x, hi, {0.0, rel, 4000}).value;
               },
               lo, hi, {0.0, rel, 4000})
        .value;
}

SymmetricMatrix conjugate(const SymmetricMatrix& x, const std::vector<double>& q) {
    const std::size_t m = x.dim();
    const std::vector<double> d = x.to_dense();
    std::vector<double> out(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l) out[i * m + j] += q[i * m + k] * d[k * m + l] * q[j * m + l];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j) out[i * m + j] = out[j * m + i] = 0.5 * (out[i * m + j] + out[j * m + i]);
    return SymmetricMatrix::from_dense(m, out);
}

}  // namespace

TEST(Constants, AgainstDirectFormulas) {
    for (std::size_t m = 1; m <= 6; ++m) {
        const double md = static_cast<double>(m);
        const double k = std::pow(2.0, -md / 2.0) * std::pow(2.0 * std::numbers::pi, -md * (md + 1.0) / 4.0);
        double c = std::pow(2.0, -md * (md + 3.0) / 4.0);
        for (std::size_t i = 1; i <= m; ++i) c /= std::tgamma(static_cast<double>(i) / 2.0);
        const EnsembleConstants got = constants(m);
        EXPECT_NEAR(got.log_K, std::log(k), 1e-13);
        EXPECT_NEAR(got.log_C, std::log(c), 1e-13);
    }
    EXPECT_THROW(constants(0), DimensionError);
}

TEST(Vandermonde, ProductOfGaps) {
    const std::vector<double> lam{-1.0, 0.5, 2.0};
    EXPECT_DOUBLE_EQ(vandermonde(lam), 1.5 * 3.0 * 1.5);
    EXPECT_DOUBLE_EQ(log_abs_vandermonde(lam), std::log(6.75));
    EXPECT_EQ(vandermonde(std::vector<double>{4.0}), 1.0);
    EXPECT_EQ(log_abs_vandermonde(std::vector<double>{1.0, 1.0}), kNegInf);
}

TEST(EigenDensity, OneByOneIsNormalWithVarianceTwo) {
    for (double x : {-3.0, 0.0, 0.7, 5.0}) {
        const double lam[] = {x};
        const double expected = -0.25 * x * x - 0.5 * std::log(4.0 * std::numbers::pi);
        EXPECT_NEAR(eigen_log_density(lam).log_value, expected, 1e-14);
    }
    const double zero[] = {0.0};
    EXPECT_DOUBLE_EQ(eigen_log_density(zero).log_value, constants(1).log_C);
}

TEST(EigenDensity, TiesAndDisorderAreZeroDensity) {
    const double tie[] = {0.3, 0.3};
    const double unordered[] = {1.0, -1.0};
    EXPECT_TRUE(eigen_log_density(tie).is_zero());
    EXPECT_TRUE(eigen_log_density(unordered).is_zero());
    EXPECT_EQ(eigen_log_density(tie).density(), 0.0);
}

TEST(EigenDensity, TwoByTwoNormalizes) {
    const double mass = ordered_mass(
        [](double a, double b) {
            const double lam[] = {a, b};
            return eigen_log_density(lam).density();
        },
        -20.0, 20.0, 1e-10);
    EXPECT_NEAR(mass, 1.0, 1e-6);
}

TEST(PairDensity, FactorizesBitExactlyAtZeroCorrelation) {
    RandomStream rng(21, 0);
    for (int t = 0; t < 20; ++t) {
        const SymmetricMatrix x = sample_goe(3, rng);
        const SymmetricMatrix y = sample_goe(3, rng);
        EXPECT_EQ(pair_matrix_log_density(x, y, 0.0).log_value,
                  goe_matrix_log_density(x).log_value + goe_matrix_log_density(y).log_value);
        const Spectrum a = symmetric_eigenvalues(x);
        const Spectrum b = symmetric_eigenvalues(y);
        EXPECT_EQ(eigen_pair_log_density(a, b, 0.0).log_value,
                  eigen_log_density(a).log_value + eigen_log_density(b).log_value);
    }
}

TEST(PairDensity, StrongCorrelationFavoursEqualArguments) {
    RandomStream rng(22, 0);
    const SymmetricMatrix x = sample_goe(2, rng);
    EXPECT_GT(pair_matrix_log_density(x, x, 0.99).log_value, pair_matrix_log_density(x, x, 0.0).log_value);
}

TEST(PairDensity, RejectsDegenerateCorrelation) {
    const SymmetricMatrix x(2);
    EXPECT_THROW(pair_matrix_log_density(x, x, 1.0), CorrelationError);
    EXPECT_THROW(pair_matrix_log_density(x, x, -1.0), CorrelationError);
    const double lam[] = {0.0, 1.0};
    EXPECT_THROW(eigen_pair_log_density(lam, lam, 1.5), CorrelationError);
    EXPECT_THROW(pair_matrix_log_density(x, SymmetricMatrix(3), 0.5), DimensionError);
}

TEST(PairDensity, ScalarCaseIsBivariateNormal) {
    SymmetricMatrix a(1);
    SymmetricMatrix b(1);
    a.at(0, 0) = 0.8;
    b.at(0, 0) = -0.3;
    const double rho = 0.4;
    const double q = (0.64 + 2 * rho * 0.24 + 0.09) / (2.0 * 2.0 * (1.0 - rho * rho));
    const double expected = -q - std::log(2.0 * std::numbers::pi * 2.0 * std::sqrt(1.0 - rho * rho));
    EXPECT_NEAR(pair_matrix_log_density(a, b, rho).log_value, expected, 1e-14);
}

TEST(MatrixDensity, OrthogonalInvariance) {
    std::mt19937_64 gen(23);
    std::normal_distribution<double> normal;
    RandomStream rng(23, 0);
    for (std::size_t m : {2u, 3u}) {
        for (int t = 0; t < 10; ++t) {
            std::vector<double> q(m * m);
            for (double& v : q) v = normal(gen);
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = 0; j < i; ++j) {
                    double d = 0.0;
                    for (std::size_t k = 0; k < m; ++k) d += q[i * m + k] * q[j * m + k];
                    for (std::size_t k = 0; k < m; ++k) q[i * m + k] -= d * q[j * m + k];
                }
                double n2 = 0.0;
                for (std::size_t k = 0; k < m; ++k) n2 += q[i * m + k] * q[i * m + k];
                for (std::size_t k = 0; k < m; ++k) q[i * m + k] /= std::sqrt(n2);
            }
            const SymmetricMatrix x = sample_goe(m, rng);
            const double base = goe_matrix_log_density(x).log_value;
            EXPECT_NEAR(goe_matrix_log_density(conjugate(x, q)).log_value, base, 1e-12 * std::abs(base));
        }
    }
}

// The correlated ordered-eigenvalue formula treats the two spectra as if the
// matrices shared eigenvectors. Away from rho = 0 it is not a normalised
// density, but for rho > 0 it dominates the true law (von Neumann trace
// inequality), so probabilities computed from it are upper bounds.
TEST(PairEigenDensity, OverstatesTheSampledLawForPositiveCorrelation) {
    constexpr double rho = 0.5;
    auto box = [&](double lo, double hi, double rel) {
        return ordered_mass(
            [&](double l1, double l2) {
                return ordered_mass(
                    [&](double u1, double u2) {
                        const double lam[] = {l1, l2};
                        const double mu[] = {u1, u2};
                        return eigen_pair_log_density(lam, mu, rho).density();
                    },
                    lo, hi, rel);
            },
            lo, hi, rel);
    };
    const double formula = box(-1.0, 1.0, 1e-7);

    RandomStream rng(24, 0);
    constexpr int kDraws = 1'000'000;
    int hits = 0;
    for (int i = 0; i < kDraws; ++i) {
        const auto [x, y] = sample_correlated_pair(2, rho, rng);
        if (spectral_norm(x) <= 1.0 && spectral_norm(y) <= 1.0) ++hits;
    }
    const double p = static_cast<double>(hits) / kDraws;
    const double se = std::sqrt(p * (1.0 - p) / kDraws);
    EXPECT_GT(formula, p + 3.0 * se);

    // Total mass over [-15, 15]^4 is about 2.209, not 1.
    EXPECT_NEAR(box(-15.0, 15.0, 1e-6), 2.209, 1e-3);
}

TEST(Selberg, SmallCases) {
    EXPECT_NEAR(selberg_unit_cube(1), 1.0, 1e-15);
    EXPECT_NEAR(selberg_unit_cube(2), 1.0 / 6.0, 1e-14);
    EXPECT_THROW(selberg_unit_cube(0), DimensionError);
}

TEST(Selberg, ThreeByThreeMonteCarlo) {
    std::mt19937_64 gen(25);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    constexpr int kSamples = 2'000'000;
    double s = 0.0;
    double ss = 0.0;
    for (int i = 0; i < kSamples; ++i) {
        const double a = u(gen), b = u(gen), c = u(gen);
        const double v = std::abs((a - b) * (a - c) * (b - c)) / 6.0;
        s += v;
        ss += v * v;
    }
    const double mean = s / kSamples;
    const double se = std::sqrt((ss / kSamples - mean * mean) / kSamples);
    EXPECT_NEAR(selberg_unit_cube(3), mean, 3.0 * se);
}

TEST(Selberg, StrictlyDecreasingInDimension) {
    for (std::size_t m = 1; m < 10; ++m) EXPECT_GT(selberg_unit_cube(m), selberg_unit_cube(m + 1)) << m;
}
