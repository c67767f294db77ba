#include "goedisc/theory.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "goedisc/densities.hpp"
#include "goedisc/error.hpp"

using namespace goedisc;

namespace {

double log_choose(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double exp_sum(const std::vector<double>& logs) {
    double s = 0.0;
    for (double v : logs) s += std::exp(v);
    return s;
}

}  // namespace

TEST(RhoK, AntisymmetricBitForBit) {
    for (int n : {1, 2, 7, 10, 33, 100, 1001}) {
        for (int k = 0; k <= n; ++k) {
            EXPECT_EQ(rho_k(n - k, n), -rho_k(k, n)) << n << ' ' << k;
            EXPECT_DOUBLE_EQ(rho_k(k, n), (n - 2.0 * k) / n);
        }
    }
    EXPECT_EQ(rho_k(0, 5), 1.0);
    EXPECT_EQ(rho_k(5, 10), 0.0);
}

TEST(SmallNorm, ScalarCaseIsErf) {
    for (double d : {1e-6, 0.01, 0.3, 1.0, 2.5, 7.0}) {
        EXPECT_NEAR(small_norm_prob_exact(1, d), std::log(std::erf(d / 2.0)), 1e-10) << d;
    }
}

TEST(SmallNorm, PowerLawForTinyDelta) {
    for (std::size_t m = 1; m <= 3; ++m) {
        const double md = static_cast<double>(m);
        const double d = 1e-4;
        const double expected = constants(m).log_C + md * (md + 1.0) / 2.0 * std::log(2.0 * d) +
                                std::log(selberg_unit_cube(m));
        EXPECT_NEAR(small_norm_prob_exact(m, d), expected, 1e-6) << m;
    }
    const double d = 1e-3;
    EXPECT_NEAR(std::exp(small_norm_prob_exact(2, d) - constants(2).log_C), 4.0 / 3.0 * d * d * d, 1e-14);
}

TEST(SmallNorm, MonotoneAndBounded) {
    for (std::size_t m = 1; m <= 3; ++m) {
        double prev = -INFINITY;
        for (double d = 0.05; d < 12.0; d *= 1.5) {
            const double v = small_norm_prob_exact(m, d);
            EXPECT_GT(v, prev);
            EXPECT_LE(v, 1e-12);
            prev = v;
        }
        EXPECT_NEAR(small_norm_prob_exact(m, 30.0), 0.0, 1e-10);
    }
}

TEST(SmallNorm, ThreeByThreeAgreesWithSampling) {
    RandomStream rng(31, 0);
    for (double d : {1.0, 2.0, 3.5}) {
        const MonteCarloProbability mc = small_norm_prob_monte_carlo(3, d, 400'000, rng);
        EXPECT_NEAR(std::exp(small_norm_prob_exact(3, d)), mc.probability, 4.0 * mc.standard_error + 1e-12) << d;
    }
}

TEST(SmallNorm, RejectsUnsupportedInput) {
    EXPECT_THROW(small_norm_prob_exact(4, 0.5), UnsupportedDimensionError);
    EXPECT_THROW(small_norm_prob_exact(2, 0.0), DomainError);
    EXPECT_THROW(small_norm_prob_exact(2, NAN), DomainError);
    RandomStream rng(1, 0);
    EXPECT_THROW(small_norm_prob_monte_carlo(2, 1.0, 0, rng), DomainError);
}

TEST(SmallNorm, InverseRoundTrip) {
    for (std::size_t m = 1; m <= 3; ++m) {
        for (double lp : {-0.5, -5.0, -20.0, -60.0}) {
            const double d = delta_for_log_probability(m, lp);
            EXPECT_NEAR(small_norm_prob_exact(m, d), lp, 1e-8 * std::abs(lp)) << m << ' ' << lp;
        }
    }
    EXPECT_THROW(delta_for_log_probability(2, 0.0), DomainError);
}

TEST(Calibration, MatchesExactProbabilityAtReference) {
    for (std::size_t m = 1; m <= 3; ++m) {
        for (double d : {0.01, 0.1, 0.4}) {
            const XiCalibration c = calibrate_xi(m, d);
            EXPECT_GT(c.xi_hat, 0.0);
            EXPECT_NEAR(small_norm_prob_asymptotic(m, d, c.xi_hat), small_norm_prob_exact(m, d),
                        1e-9 * std::abs(small_norm_prob_exact(m, d)));
        }
    }
    EXPECT_THROW(calibrate_xi(2, small_norm_boundary(2)), DomainError);
    EXPECT_THROW(calibrate_xi(2, -0.1), DomainError);
}

TEST(Calibration, FixedPointHitsOneInTwoToTheN) {
    for (int n : {12, 18, 24}) {
        const XiCalibration c = calibrate_xi_fixed_point(2, n);
        ASSERT_TRUE(c.converged) << n;
        const double d = predicted_delta(n, 2, c.xi_hat, 1.0);
        EXPECT_NEAR(d, c.delta_ref, 1e-5 * d);
        EXPECT_NEAR(small_norm_prob_exact(2, d), -n * std::numbers::ln2, 1e-4) << n;
    }
}

TEST(Calibration, FixedPointIncreasesWithN) {
    double prev = 0.0;
    for (int n : {12, 18, 24, 200}) {
        const double xi = calibrate_xi_fixed_point(2, n).xi_hat;
        EXPECT_GT(xi, prev);
        EXPECT_LT(xi, 1.0);
        prev = xi;
    }
}

TEST(Prediction, DirectFormula) {
    for (int n : {1, 12, 40}) {
        for (std::size_t m : {1u, 2u, 5u}) {
            const double md = static_cast<double>(m);
            const double xi = 0.6;
            const double direct = 1.7 * 2.0 * std::exp(-0.75) * std::sqrt(n * md) * std::pow(4.0, -xi * n / (md * md));
            EXPECT_NEAR(predicted_discrepancy(n, m, xi, 1.7), direct, 1e-13 * direct);
            EXPECT_NEAR(predicted_delta(n, m, xi, 1.7), direct / std::sqrt(n), 1e-13 * direct);
        }
    }
    EXPECT_THROW(predicted_discrepancy(0, 2, 0.5, 1.0), DomainError);
    EXPECT_THROW(predicted_discrepancy(5, 2, 0.0, 1.0), DomainError);
}

TEST(RatioBound, DominatesPointwiseRemainder) {
    std::mt19937_64 gen(32);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n : {7, 20}) {
        for (int k = 1; k < n; ++k) {
            for (std::size_t m = 1; m <= 3; ++m) {
                const double delta = 0.8;
                const double bound = ratio_bound(k, n, m, delta);
                const RatioMaximizer tight = ratio_bound_tight_point(k, n, delta, m);
                EXPECT_LE(tight.log_value, bound + 1e-15);
                EXPECT_NEAR(log_ratio_remainder(tight.lambda, tight.mu, rho_k(k, n)), tight.log_value, 1e-13);
                for (int t = 0; t < 20; ++t) {
                    std::vector<double> lam(m), mu(m);
                    for (std::size_t i = 0; i < m; ++i) {
                        lam[i] = delta * u(gen);
                        mu[i] = delta * u(gen);
                    }
                    EXPECT_LE(log_ratio_remainder(lam, mu, rho_k(k, n)), tight.log_value + 1e-13);
                }
            }
        }
    }
    EXPECT_THROW(ratio_bound(0, 10, 2, 0.5), CorrelationError);
    EXPECT_THROW(ratio_bound(11, 10, 2, 0.5), DomainError);
}

TEST(RatioRemainder, EqualsDensityRatio) {
    const std::vector<double> lam{-0.4, 0.9};
    const std::vector<double> mu{0.1, 0.3};
    for (double rho : {-0.6, 0.0, 0.35, 0.9}) {
        const double ratio = eigen_pair_log_density(lam, mu, rho).log_value - eigen_log_density(lam).log_value -
                             eigen_log_density(mu).log_value;
        EXPECT_NEAR(log_ratio_remainder(lam, mu, rho), ratio, 1e-13) << rho;
    }
    EXPECT_EQ(log_ratio_remainder(lam, mu, 0.0), 0.0);
    EXPECT_THROW(log_ratio_remainder(lam, mu, 1.0), CorrelationError);
}

TEST(FirstMoment, ScalarClosedForm) {
    for (int n : {1, 10, 100}) {
        const double eps = 0.7;
        EXPECT_NEAR(first_moment_log(n, 1, eps), n * std::numbers::ln2 + std::log(std::erf(eps / std::sqrt(n) / 2.0)),
                    1e-9);
    }
    EXPECT_THROW(first_moment_log(10, 4, 1.0), UnsupportedDimensionError);
    EXPECT_NEAR(first_moment_log(10, 4, 1.0, 0.5),
                10 * std::numbers::ln2 + small_norm_prob_asymptotic(4, 1.0 / std::sqrt(10.0), 0.5), 1e-12);
}

TEST(SecondMoment, PartitionAndSymmetry) {
    for (int n : {8, 40, 101}) {
        const MomentReport r = second_moment_terms(n, 2, 0.2);
        ASSERT_EQ(r.log_terms.size(), static_cast<std::size_t>(n) + 1);
        EXPECT_NEAR(r.leading_term + r.lower_term, std::exp(r.log_total), 1e-12 * std::exp(r.log_total));
        EXPECT_EQ(r.leading_first_k, (n + 3) / 4);
        EXPECT_EQ(r.leading_last_k, 3 * n / 4);
        for (int k = 0; k <= n; ++k) EXPECT_EQ(r.log_terms[k], r.log_terms[n - k]) << k;

        std::vector<double> lead;
        for (int k = r.leading_first_k; k <= r.leading_last_k; ++k) lead.push_back(r.log_terms[k]);
        EXPECT_NEAR(r.leading_term, exp_sum(lead), 1e-12 * r.leading_term);

        const double k1 = ratio_bound(1, n, 2, 0.2);
        EXPECT_NEAR(r.log_terms[1], std::log(static_cast<double>(n)) + k1 - n * std::numbers::ln2, 1e-12);
        EXPECT_NEAR(r.log_terms[0], -small_norm_prob_exact(2, 0.2) - n * std::numbers::ln2, 1e-12);
        EXPECT_NEAR(r.log_second_moment_upper, 2.0 * r.log_first_moment + r.log_total, 1e-12);
    }
    EXPECT_THROW(second_moment_terms(3, 2, 0.2), DomainError);
}

TEST(SecondMoment, LeadingTermNearOneForLargeN) {
    const MomentReport r = second_moment_terms(400, 2, 0.05);
    EXPECT_NEAR(r.leading_term, 1.0, 0.02);
    EXPECT_GT(r.laplace_leading_estimate, 0.0);
}

TEST(Binomial, TailBoundHolds) {
    for (int n = 1; n <= 60; ++n) {
        for (int t = 1; t <= n; ++t) {
            std::vector<double> logs;
            for (int k = 0; k <= t; ++k) logs.push_back(log_choose(n, k));
            EXPECT_LE(std::log(exp_sum(logs)), binomial_tail_bound(n, t) + 1e-12) << n << ' ' << t;
        }
    }
    EXPECT_THROW(binomial_tail_bound(5, 0), DomainError);
}

TEST(Binomial, StirlingApproximation) {
    for (int n : {10, 21, 50}) {
        for (int k = 1; k < n; ++k) EXPECT_EQ(binomial_log_approx(n, k), binomial_log_approx(n, n - k));
    }
    // Centre of n = 10: 252 against about 258.4.
    const double centre = std::exp(binomial_log_approx(10, 5)) / 252.0 - 1.0;
    EXPECT_GT(centre, 0.0);
    EXPECT_LT(centre, 0.03);
    // The neglected Stirling corrections at n = 10, k = 3 are close to 1/30.
    EXPECT_NEAR(std::exp(binomial_log_approx(10, 3)) / 120.0 - 1.0, 0.0317, 5e-4);
    for (int n : {100, 1000}) {
        for (int k = n / 5; k <= 4 * n / 5; k += n / 10) {
            EXPECT_LT(std::abs(std::expm1(binomial_log_approx(n, k) - log_choose(n, k))), 1.0 / n) << n << ' ' << k;
        }
    }
    EXPECT_THROW(binomial_log_approx(10, 0), DomainError);
    EXPECT_THROW(binomial_log_approx(10, 10), DomainError);
}

TEST(AuxFunctions, ValuesAtCentre) {
    const AuxParams p{1e-4, 50, 2, 0.3};
    const AuxValues v = aux_functions(0.5, p);
    EXPECT_DOUBLE_EQ(v.f, 1e-2);
    EXPECT_DOUBLE_EQ(v.g, std::log(4.0));
    EXPECT_DOUBLE_EQ(v.h, std::numbers::ln2);
    EXPECT_NEAR(v.phi, std::numbers::ln2 + 2 * 0.09 / 50 * 1e-2 + std::log(4.0) / 100, 1e-15);
    EXPECT_LT(v.phi_second, 0.0);
}

TEST(AuxFunctions, CurvatureMatchesFiniteDifferences) {
    const AuxParams p{0.01, 30, 3, 0.5};
    const double h = 1e-4;
    for (double x : {0.26, 0.33, 0.45, 0.5, 0.58, 0.74}) {
        const double fd = (aux_functions(x + h, p).phi - 2.0 * aux_functions(x, p).phi + aux_functions(x - h, p).phi) /
                          (h * h);
        EXPECT_NEAR(aux_functions(x, p).phi_second, fd, 1e-5 * std::max(1.0, std::abs(fd))) << x;
    }
}

TEST(AuxFunctions, RejectsBadInput) {
    EXPECT_THROW(aux_functions(0.2, {}), DomainError);
    EXPECT_THROW(aux_functions(0.8, {}), DomainError);
    EXPECT_THROW(aux_functions(0.5, {0.0, 10, 2, 0.1}), DomainError);
    EXPECT_THROW(aux_functions(0.5, {1e-4, 0, 2, 0.1}), DomainError);
    EXPECT_THROW(moment_exponent({1e-4, 10, 0, 0.1}), DomainError);
}
