#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "goedisc/laplace.hpp"
#include "goedisc/random.hpp"

namespace goedisc {

inline constexpr double kDefaultSmoothing = 1e-4;

/// Correlation between the normalised signed sums of two signings at Hamming
/// distance k: (n - 2k) / n. Computed from the integer numerator so that
/// rho_k(n - k, n) == -rho_k(k, n) bit for bit.
double rho_k(int k, int n);

/// 2 sqrt(m) e^{-3/4}: the radius at which the small-norm power law reaches 1.
double small_norm_boundary(std::size_t m);

/// log P(||X|| <= delta) for an m x m GOE matrix, m in {1, 2, 3}, by nested
/// adaptive quadrature of the ordered eigenvalue density over [-delta, delta]^m.
double small_norm_prob_exact(std::size_t m, double delta);

struct MonteCarloProbability {
    double probability;
    double standard_error;
    std::size_t samples;
    std::size_t hits;
};

/// Plain Monte Carlo estimate of P(||X|| <= delta); the path used for m > 3.
MonteCarloProbability small_norm_prob_monte_carlo(std::size_t m, double delta, std::size_t samples,
                                                  RandomStream& rng);

/// (m^2 / (2 xi)) log(e^{3/4} delta / (2 sqrt m)).
double small_norm_prob_asymptotic(std::size_t m, double delta, double xi);

/// delta with small_norm_prob_exact(m, delta) == log_p, by bisection on log delta.
double delta_for_log_probability(std::size_t m, double log_p);

struct XiCalibration {
    std::size_t m = 0;
    double delta_ref = 0.0;
    double xi_hat = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// xi_hat with P_exact(delta_ref) == (e^{3/4} delta_ref / (2 sqrt m))^{m^2/(2 xi_hat)}.
/// delta_ref must lie in (0, boundary) and at least 1e-6 below the boundary.
XiCalibration calibrate_xi(std::size_t m, double delta_ref);

/// Self-consistent calibration: iterate delta <- predicted per-matrix scale at
/// (n, xi_hat, scale) and xi_hat <- calibrate_xi(m, delta) until |dxi| < 1e-6
/// or 20 iterations. A run that does not settle is flagged converged = false.
XiCalibration calibrate_xi_fixed_point(std::size_t m, int n, double scale = 1.0);

/// scale * 2 e^{-3/4} sqrt(n m) 4^{-xi n / m^2}, evaluated in the log domain.
double predicted_discrepancy(int n, std::size_t m, double xi, double scale);
double log_predicted_discrepancy(int n, std::size_t m, double xi, double scale);

/// predicted_discrepancy / sqrt(n): the norm threshold for one normalised sum.
double predicted_delta(int n, std::size_t m, double xi, double scale);

/// log of the closed-form bound on R_k(delta), 0 < k < n:
/// -(m(m+1)/4) log(1 - rho_k^2) + |rho_k| m delta^2.
double ratio_bound(int k, int n, std::size_t m, double delta);

/// log r_k(lam, mu): the pointwise ratio q_k / (p(lam) p(mu)) of the
/// correlated eigenvalue density to the product of marginals.
double log_ratio_remainder(const std::vector<double>& lam, const std::vector<double>& mu, double rho);

struct RatioMaximizer {
    std::vector<double> lambda;
    std::vector<double> mu;
    bool nonnegative_correlation = true;
    double log_value = 0.0;
};

/// Boundary maximiser of log r_k over the ordered boxes: all entries delta for
/// both spectra when rho_k >= 0, delta against -delta when rho_k < 0.
RatioMaximizer ratio_bound_tight_point(int k, int n, double delta, std::size_t m);

/// log E[S_n(eps)] = n log 2 + log P(||X|| <= eps / sqrt n). Exact quadrature
/// for m <= 3, otherwise the asymptotic law with the supplied xi (capped at
/// probability 1).
double first_moment_log(int n, std::size_t m, double epsilon, std::optional<double> xi = std::nullopt);

struct MomentReport {
    int n = 0;
    std::size_t m = 0;
    double delta = 0.0;
    double epsilon = 0.0;
    double log_small_norm_prob = 0.0;
    double log_first_moment = 0.0;
    /// 2 log E[S] + log_total: log of the bound on E[S^2]
    double log_second_moment_upper = 0.0;
    /// log of 2^{-n} sum_k C(n,k) Rbar_k
    double log_total = 0.0;
    double log_leading = 0.0;
    double log_lower = 0.0;
    double leading_term = 0.0;
    double lower_term = 0.0;
    /// 2^{-n} e^{n phi_n(1/2)} / sqrt|phi_n''(1/2)|: the Laplace estimate of the leading term.
    double laplace_leading_estimate = 0.0;
    int leading_first_k = 0;
    int leading_last_k = 0;
    /// log(2^{-n} C(n,k) Rbar_k) for k = 0..n
    std::vector<double> log_terms;
};

/// Second-moment bookkeeping for S_n(sqrt(n) delta). Interior terms use
/// ratio_bound; k in {0, n} use the crude bound 1 / P(||X|| <= delta).
/// The leading term covers ceil(n/4) <= k <= floor(3n/4); the lower term is
/// its complement, so leading + lower == total.
MomentReport second_moment_terms(int n, std::size_t m, double delta, double eps_smooth = kDefaultSmoothing,
                                 std::optional<double> xi = std::nullopt);

/// log (e n / t)^t, the bound on sum_{k <= t} C(n, k).
double binomial_tail_bound(int n, int t);

/// n h(k/n) - (1/2) log(2 pi n x (1-x)) with x = k/n; symmetric in k <-> n-k.
double binomial_log_approx(int n, int k);

struct AuxParams {
    double eps_smooth = kDefaultSmoothing;
    int n = 1;
    std::size_t m = 1;
    double delta = 0.0;
};

struct AuxValues {
    double f;
    double g;
    double h;
    double phi;
    double phi_second;
};

/// f(x) = sqrt((1-2x)^2 + eps), g(x) = -log(x(1-x)), h the binary entropy,
/// phi_n = h + m(m+1)/(4n) (g - log 4) + m delta^2/n f + g/(2n), and phi_n''
/// assembled from the closed-form second derivatives. x must lie in [1/4, 3/4].
AuxValues aux_functions(double x, const AuxParams& params);

/// phi_n on [1/4, 3/4] with its peak at 1/2, ready for the Laplace routines.
ExponentFunction moment_exponent(const AuxParams& params);

}  // namespace goedisc
