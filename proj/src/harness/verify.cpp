#include "goedisc/harness/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "goedisc/densities.hpp"
#include "goedisc/discrepancy.hpp"
#include "goedisc/eigen.hpp"
#include "goedisc/error.hpp"
#include "goedisc/harness/experiment.hpp"
#include "goedisc/laplace.hpp"
#include "goedisc/quadrature.hpp"
#include "goedisc/rmt.hpp"
#include "goedisc/special.hpp"
#include "goedisc/theory.hpp"

namespace goedisc::harness {

namespace {

using Suite = std::function<void(std::vector<CheckResult>&, std::uint64_t)>;

void at_most(std::vector<CheckResult>& out, const char* suite, const std::string& check, double measured,
             double tolerance) {
    out.push_back({suite, check, measured, tolerance, measured <= tolerance});
}

void at_least(std::vector<CheckResult>& out, const char* suite, const std::string& check, double measured,
              double threshold) {
    out.push_back({suite, check, measured, threshold, measured >= threshold});
}

double integrate_1d(const std::function<double(double)>& f, double a, double b, double rel) {
    return integrate_adaptive(f, a, b, {0.0, rel, 4000}).value;
}

// Mass of an ordered two-coordinate density over lo <= x1 <= x2 <= hi.
double ordered_mass_2d(const std::function<double(double, double)>& f, double lo, double hi, double rel) {
    return integrate_1d([&](double x1) { return integrate_1d([&](double x2) { return f(x1, x2); }, x1, hi, rel); },
                        lo, hi, rel);
}

std::vector<double> random_orthogonal(std::size_t m, RandomStream& rng) {
    std::normal_distribution<double> normal;
    std::vector<double> q(m * m);
    for (double& v : q) v = normal(rng);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < m; ++k) dot += q[i * m + k] * q[j * m + k];
            for (std::size_t k = 0; k < m; ++k) q[i * m + k] -= dot * q[j * m + k];
        }
        double norm = 0.0;
        for (std::size_t k = 0; k < m; ++k) norm += q[i * m + k] * q[i * m + k];
        norm = std::sqrt(norm);
        for (std::size_t k = 0; k < m; ++k) q[i * m + k] /= norm;
    }
    return q;
}

void densities_suite(std::vector<CheckResult>& out, std::uint64_t seed) {
    const char* s = "densities";
    const double m1 = integrate_1d(
        [](double x) {
            SymmetricMatrix a(1);
            a.at(0, 0) = x;
            return goe_matrix_log_density(a).density();
        },
        -20.0, 20.0, 1e-13);
    at_most(out, s, "matrix_density_m1_mass", std::abs(m1 - 1.0), 1e-10);

    const double m2 = ordered_mass_2d(
        [](double a, double b) {
            const double lam[] = {a, b};
            return eigen_log_density(lam).density();
        },
        -20.0, 20.0, 1e-10);
    at_most(out, s, "eigen_density_m2_mass", std::abs(m2 - 1.0), 1e-6);

    const double pair1 = integrate_1d(
        [](double x) {
            return integrate_1d(
                [x](double y) {
                    SymmetricMatrix a(1);
                    SymmetricMatrix b(1);
                    a.at(0, 0) = x;
                    b.at(0, 0) = y;
                    return pair_matrix_log_density(a, b, 0.5).density();
                },
                -20.0, 20.0, 1e-12);
        },
        -20.0, 20.0, 1e-12);
    at_most(out, s, "pair_density_m1_rho0.5_mass", std::abs(pair1 - 1.0), 1e-8);

    const double pair2 = ordered_mass_2d(
        [](double l1, double l2) {
            return ordered_mass_2d(
                [l1, l2](double u1, double u2) {
                    const double lam[] = {l1, l2};
                    const double mu[] = {u1, u2};
                    return eigen_pair_log_density(lam, mu, 0.5).density();
                },
                -15.0, 15.0, 1e-6);
        },
        -15.0, 15.0, 1e-6);
    at_most(out, s, "eigen_pair_density_m2_rho0.5_mass", std::abs(pair2 - 1.0), 1e-4);

    RandomStream rng(seed, 101);
    double factor_gap = 0.0;
    double rotation_gap = 0.0;
    for (int t = 0; t < 20; ++t) {
        const std::size_t m = 2 + static_cast<std::size_t>(t % 2);
        const SymmetricMatrix x = sample_goe(m, rng);
        const SymmetricMatrix y = sample_goe(m, rng);
        const double joint = pair_matrix_log_density(x, y, 0.0).log_value;
        const double split = goe_matrix_log_density(x).log_value + goe_matrix_log_density(y).log_value;
        factor_gap = std::max(factor_gap, std::abs(joint - split));
        const SymmetricMatrix r = conjugate(x, random_orthogonal(m, rng));
        const double base = goe_matrix_log_density(x).log_value;
        rotation_gap = std::max(rotation_gap, std::abs(goe_matrix_log_density(r).log_value - base) / std::abs(base));
    }
    at_most(out, s, "pair_density_rho0_factorization", factor_gap, 0.0);
    at_most(out, s, "matrix_density_rotation_invariance", rotation_gap, 1e-12);
}

void selberg_suite(std::vector<CheckResult>& out, std::uint64_t seed) {
    const char* s = "selberg";
    at_most(out, s, "m1_equals_one", std::abs(selberg_unit_cube(1) - 1.0), 1e-12);
    const double square = integrate_1d(
        [](double x) {
            return integrate_1d([x](double y) { return y - x; }, x, 1.0, 1e-13) +
                   integrate_1d([x](double y) { return x - y; }, 0.0, x, 1e-13);
        },
        0.0, 1.0, 1e-13);
    at_most(out, s, "m2_vs_quadrature", std::abs(selberg_unit_cube(2) - square / 2.0), 1e-9);

    RandomStream rng(seed, 102);
    constexpr std::size_t kSamples = 10'000'000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < kSamples; ++i) {
        const double a = rng.uniform();
        const double b = rng.uniform();
        const double c = rng.uniform();
        const double v = std::abs((b - a) * (c - a) * (c - b)) / 6.0;
        sum += v;
        sum_sq += v * v;
    }
    const double mean = sum / kSamples;
    const double se = std::sqrt((sum_sq / kSamples - mean * mean) / kSamples);
    at_most(out, s, "m3_vs_monte_carlo_sigmas", std::abs(selberg_unit_cube(3) - mean) / se, 3.0);
}

void moments_suite(std::vector<CheckResult>& out, std::uint64_t seed) {
    const char* s = "moments";
    constexpr int kN = 10;
    constexpr int kEnsembles = 2000;
    const double delta = delta_for_log_probability(2, std::log(0.01));
    const double epsilon = std::sqrt(static_cast<double>(kN)) * delta;
    double total = 0.0;
    for (int t = 0; t < kEnsembles; ++t) {
        total += static_cast<double>(count_low_disc(trial_ensemble(kN, 2, trial_seed(seed, kN, t)), epsilon).count);
    }
    const double expected = std::exp(first_moment_log(kN, 2, epsilon));
    at_most(out, s, "first_moment_n10_m2_relative_gap", std::abs(total / kEnsembles / expected - 1.0), 0.10);

    double previous_leading = std::numeric_limits<double>::infinity();
    bool leading_decreasing = true;
    for (int n : {40, 100, 200}) {
        const XiCalibration cal = calibrate_xi_fixed_point(2, n);
        const MomentReport r = second_moment_terms(n, 2, predicted_delta(n, 2, cal.xi_hat, 1.0));
        at_least(out, s, "second_moment_total_n" + std::to_string(n), std::exp(r.log_total), 1.0);
        leading_decreasing = leading_decreasing && r.leading_term < previous_leading;
        previous_leading = r.leading_term;
    }
    at_least(out, s, "leading_term_decreasing", leading_decreasing ? 1.0 : 0.0, 1.0);

    double worst_tail = -std::numeric_limits<double>::infinity();
    for (int n = 1; n <= 30; ++n) {
        for (int t = 1; t <= n; ++t) {
            std::vector<double> terms;
            for (int k = 0; k <= t; ++k) terms.push_back(log_binomial(n, k));
            worst_tail = std::max(worst_tail, log_sum_exp(terms) - binomial_tail_bound(n, t));
        }
    }
    at_most(out, s, "binomial_tail_bound_excess", worst_tail, 0.0);

    auto worst_approx = [](int n, int lo, int hi) {
        double worst = 0.0;
        for (int k = lo; k <= hi; ++k) {
            worst = std::max(worst, std::abs(std::expm1(binomial_log_approx(n, k) - log_binomial(n, k))));
        }
        return worst;
    };
    at_most(out, s, "binomial_approx_n10", worst_approx(10, 3, 7), 0.03);
    at_most(out, s, "binomial_approx_n100", worst_approx(100, 25, 75), 0.005);
}

void ratio_suite(std::vector<CheckResult>& out, std::uint64_t seed) {
    const char* s = "ratio";
    constexpr int kN = 10;
    constexpr int kK = 2;
    constexpr double kDelta = 0.5;
    constexpr std::size_t kDraws = 1'000'000;
    const double rho = rho_k(kK, kN);
    RandomStream rng(seed, 103);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < kDraws; ++i) {
        const auto [x, y] = sample_correlated_pair(2, rho, rng);
        if (spectral_norm(x) <= kDelta && spectral_norm(y) <= kDelta) ++hits;
    }
    const double p = static_cast<double>(hits) / kDraws;
    const double upper = p + 1.6448536269514722 * std::sqrt(p * (1.0 - p) / kDraws);
    const double marginal = std::exp(small_norm_prob_exact(2, kDelta));
    at_most(out, s, "monte_carlo_ratio_upper95_over_bound", upper / (marginal * marginal) /
                                                                 std::exp(ratio_bound(kK, kN, 2, kDelta)),
            1.0);

    for (int k : {2, 8}) {
        const RatioMaximizer tight = ratio_bound_tight_point(k, kN, kDelta, 2);
        const double rk = rho_k(k, kN);
        double grid_max = -std::numeric_limits<double>::infinity();
        constexpr int kGrid = 41;
        std::vector<double> g(kGrid);
        for (int i = 0; i < kGrid; ++i) g[static_cast<std::size_t>(i)] = -kDelta + 2.0 * kDelta * i / (kGrid - 1);
        for (std::size_t a = 0; a < g.size(); ++a) {
            for (std::size_t b = a; b < g.size(); ++b) {
                for (std::size_t c = 0; c < g.size(); ++c) {
                    for (std::size_t d = c; d < g.size(); ++d) {
                        grid_max = std::max(grid_max, log_ratio_remainder({g[a], g[b]}, {g[c], g[d]}, rk));
                    }
                }
            }
        }
        at_most(out, s, "grid_max_vs_boundary_k" + std::to_string(k), std::abs(grid_max - tight.log_value), 1e-9);
        at_most(out, s, "boundary_below_bound_k" + std::to_string(k), tight.log_value - ratio_bound(k, kN, 2, kDelta),
                0.0);
    }
}

void laplace_suite(std::vector<CheckResult>& out, std::uint64_t) {
    const char* s = "laplace";
    auto quadratic = [](double a, double b) {
        return [a, b](double) {
            return ExponentFunction{[](double x) {
                                        const double d = x - 0.5;
                                        return std::pair{-d * d, -2.0};
                                    },
                                    a, b, 0.5};
        };
    };
    const LaplaceDecay full = laplace_error_decay(quadratic(0.0, 1.0), {1e4});
    at_most(out, s, "quadratic_n1e4_relative_error", full.rows.back().relative_error, 0.005);
    const LaplaceDecay window = laplace_error_decay(quadratic(0.47, 0.53), {1e2, 1e3, 1e4});
    at_least(out, s, "quadratic_errors_strictly_decrease", window.strictly_decreasing() ? 1.0 : 0.0, 1.0);

    const LaplaceDecay family = laplace_error_decay(
        [](double n) { return moment_exponent({kDefaultSmoothing, static_cast<int>(n), 2, 0.1}); }, {1e3, 1e4, 1e5});
    at_least(out, s, "moment_exponent_errors_strictly_decrease", family.strictly_decreasing() ? 1.0 : 0.0, 1.0);
    at_most(out, s, "moment_exponent_n1e5_relative_error", family.rows.back().relative_error, 0.01);
    at_most(out, s, "moment_exponent_hypothesis_warnings", static_cast<double>(family.warnings.size()), 0.0);

    const ExponentFunction phi = moment_exponent({kDefaultSmoothing, 1000, 2, 0.1});
    at_most(out, s, "quadrature_below_peak_bound", integrate_exp_n_phi(phi, 1000.0) - peak_bound(phi, 1000.0), 0.0);
}

void eigensolver_suite(std::vector<CheckResult>& out, std::uint64_t seed) {
    const char* s = "eigensolver";
    RandomStream rng(seed, 104);
    double closed_gap = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const SymmetricMatrix a = sample_goe(2, rng);
        closed_gap = std::max(closed_gap, std::abs(spectral_norm(a) - spectral_norm_2x2(a(0, 0), a(0, 1), a(1, 1))));
    }
    at_most(out, s, "jacobi_vs_closed_form_2x2", closed_gap, 1e-12);

    double known_gap = 0.0;
    for (int t = 0; t < 20; ++t) {
        const std::vector<double> values{-3.0, -0.5, 0.0, 1.25, 4.0};
        const SymmetricMatrix a = conjugate(SymmetricMatrix::diagonal(values), random_orthogonal(5, rng));
        const Spectrum spec = symmetric_eigenvalues(a);
        for (std::size_t i = 0; i < values.size(); ++i) {
            known_gap = std::max(known_gap, std::abs(spec.values[i] - values[i]));
        }
    }
    at_most(out, s, "known_spectrum_recovery", known_gap, 1e-10);

    std::vector<double> scaled;
    for (int t = 0; t < 50; ++t) scaled.push_back(spectral_norm(sample_goe(100, rng)) / 10.0);
    const double med = median(scaled);
    at_least(out, s, "m100_median_norm_over_sqrt_m_low", med, 1.7);
    at_most(out, s, "m100_median_norm_over_sqrt_m_high", med, 2.3);
}

const std::vector<std::pair<std::string, Suite>>& registry() {
    static const std::vector<std::pair<std::string, Suite>> suites{
        {"densities", densities_suite}, {"selberg", selberg_suite}, {"moments", moments_suite},
        {"ratio", ratio_suite},         {"laplace", laplace_suite}, {"eigensolver", eigensolver_suite},
    };
    return suites;
}

}  // namespace

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, suite] : registry()) v.push_back(name);
        return v;
    }();
    return names;
}

VerifyReport run_verify(const std::string& suite, std::uint64_t seed) {
    VerifyReport report;
    bool found = false;
    for (const auto& [name, run] : registry()) {
        if (suite != "all" && suite != name) continue;
        found = true;
        try {
            run(report.checks, seed);
        } catch (const std::exception& e) {
            report.checks.push_back({name, std::string("suite_aborted: ") + e.what(), 0.0, 0.0, false});
        }
    }
    if (!found) throw DomainError("unknown verify suite '" + suite + "'");
    return report;
}

Table verify_table(const VerifyReport& report) {
    Table t;
    t.columns = {"suite", "check", "measured", "tolerance", "passed"};
    for (const CheckResult& c : report.checks) t.rows.push_back({c.suite, c.check, c.measured, c.tolerance, c.passed});
    return t;
}

}  // namespace goedisc::harness
