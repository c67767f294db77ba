#include "goedisc/theory.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "goedisc/densities.hpp"
#include "goedisc/eigen.hpp"
#include "goedisc/error.hpp"
#include "goedisc/quadrature.hpp"
#include "goedisc/rmt.hpp"
#include "goedisc/special.hpp"

namespace goedisc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Beyond this radius the eigenvalue density mass is below e^{-400}.
constexpr double kTailClip = 40.0;

double md(std::size_t m) { return static_cast<double>(m); }

// int over lo <= x_1 <= ... <= x_m <= hi of exp(-c |x|^2) Delta(x).
double ordered_box_integral(std::size_t m, double lo, double hi, double c) {
    std::vector<double> point(m);
    const double rel_tol[] = {1e-12, 1e-11, 1e-10};
    std::function<double(std::size_t, double)> level = [&](std::size_t depth, double from) -> double {
        const QuadratureOptions opts{0.0, rel_tol[m - 1 - depth], 4000};
        auto integrand = [&](double x) -> double {
            point[depth] = x;
            if (depth + 1 == m) {
                double sq = 0.0;
                for (double v : point) sq += v * v;
                return std::exp(-c * sq) * vandermonde(point);
            }
            return level(depth + 1, x);
        };
        return integrate_adaptive(integrand, from, hi, opts).value;
    };
    return level(0, lo);
}

void check_k(int k, int n, const char* who) {
    if (n < 1 || k < 0 || k > n) {
        throw DomainError(std::string(who) + ": need n >= 1 and 0 <= k <= n");
    }
}

void check_interior_k(int k, int n, const char* who) {
    check_k(k, n, who);
    if (k == 0 || k == n) {
        throw CorrelationError(std::string(who) + ": k in {0, n} gives |rho| = 1; need 0 < k < n");
    }
}

double log_probability(std::size_t m, double delta, std::optional<double> xi) {
    if (m <= 3) return small_norm_prob_exact(m, delta);
    if (!xi) {
        throw UnsupportedDimensionError("m > 3 needs a calibrated xi for the small-norm probability");
    }
    return std::min(0.0, small_norm_prob_asymptotic(m, delta, *xi));
}

}  // namespace

double rho_k(int k, int n) {
    check_k(k, n, "rho_k");
    return static_cast<double>(n - 2 * k) / static_cast<double>(n);
}

double small_norm_boundary(std::size_t m) { return 2.0 * std::sqrt(md(m)) * std::exp(-0.75); }

double small_norm_prob_exact(std::size_t m, double delta) {
    if (m == 0 || m > 3) {
        throw UnsupportedDimensionError("small_norm_prob_exact: m must be 1, 2 or 3 (use Monte Carlo beyond)");
    }
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw DomainError("small_norm_prob_exact: delta must be finite and > 0");
    }
    const EnsembleConstants c = constants(m);
    if (delta <= 1.0) {
        // lam = delta u keeps relative accuracy for tiny delta.
        const double integral = ordered_box_integral(m, -1.0, 1.0, delta * delta / 4.0);
        return c.log_C + (md(m) * (md(m) + 1.0) / 2.0) * std::log(delta) + std::log(integral);
    }
    const double radius = std::min(delta, kTailClip);
    const double integral = ordered_box_integral(m, -radius, radius, 0.25);
    return std::min(0.0, c.log_C + std::log(integral));
}

MonteCarloProbability small_norm_prob_monte_carlo(std::size_t m, double delta, std::size_t samples,
                                                  RandomStream& rng) {
    if (samples == 0) throw DomainError("small_norm_prob_monte_carlo: samples must be >= 1");
    std::size_t hits = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        if (spectral_norm(sample_goe(m, rng)) <= delta) ++hits;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(samples)), samples, hits};
}

double small_norm_prob_asymptotic(std::size_t m, double delta, double xi) {
    if (m == 0) throw DimensionError("small_norm_prob_asymptotic: m must be >= 1");
    if (!(delta > 0.0) || !(xi > 0.0)) {
        throw DomainError("small_norm_prob_asymptotic: delta and xi must be > 0");
    }
    return (md(m) * md(m) / (2.0 * xi)) * std::log(std::exp(0.75) * delta / (2.0 * std::sqrt(md(m))));
}

double delta_for_log_probability(std::size_t m, double log_p) {
    if (!(log_p < 0.0)) throw DomainError("delta_for_log_probability: need log_p < 0");
    double lo = std::log(1e-12);
    double hi = std::log(60.0);
    while (lo > -690.0 && small_norm_prob_exact(m, std::exp(lo)) >= log_p) {
        hi = lo;
        lo -= 20.0;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (small_norm_prob_exact(m, std::exp(mid)) < log_p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return std::exp(0.5 * (lo + hi));
}

XiCalibration calibrate_xi(std::size_t m, double delta_ref) {
    const double boundary = small_norm_boundary(m);
    if (!(delta_ref > 0.0) || !(delta_ref < boundary - 1e-6)) {
        throw DomainError("calibrate_xi: delta_ref must lie in (0, 2 sqrt(m) e^{-3/4} - 1e-6)");
    }
    const double log_exact = small_norm_prob_exact(m, delta_ref);
    const double log_base = std::log(std::exp(0.75) * delta_ref / (2.0 * std::sqrt(md(m))));
    XiCalibration cal;
    cal.m = m;
    cal.delta_ref = delta_ref;
    cal.xi_hat = (md(m) * md(m) / 2.0) * log_base / log_exact;
    cal.iterations = 0;
    cal.converged = std::isfinite(cal.xi_hat) && cal.xi_hat > 0.0;
    return cal;
}

XiCalibration calibrate_xi_fixed_point(std::size_t m, int n, double scale) {
    if (n < 1) throw DomainError("calibrate_xi_fixed_point: n must be >= 1");
    constexpr int kMaxIterations = 20;
    constexpr double kStep = 1e-6;
    double xi = 1.0;
    XiCalibration cal;
    for (int it = 1; it <= kMaxIterations; ++it) {
        const double delta = predicted_delta(n, m, xi, scale);
        cal = calibrate_xi(m, delta);
        cal.iterations = it;
        const double step = std::abs(cal.xi_hat - xi);
        xi = cal.xi_hat;
        if (step < kStep) {
            cal.converged = true;
            return cal;
        }
    }
    cal.converged = false;
    return cal;
}

double log_predicted_discrepancy(int n, std::size_t m, double xi, double scale) {
    if (n < 1 || m == 0) throw DomainError("predicted_discrepancy: n, m must be >= 1");
    if (!(xi > 0.0) || scale < 0.0) throw DomainError("predicted_discrepancy: need xi > 0, scale >= 0");
    if (scale == 0.0) return kNegInf;
    const double nd = static_cast<double>(n);
    return std::log(scale) + std::numbers::ln2 - 0.75 + 0.5 * std::log(nd * md(m)) -
           xi * nd * std::log(4.0) / (md(m) * md(m));
}

double predicted_discrepancy(int n, std::size_t m, double xi, double scale) {
    return std::exp(log_predicted_discrepancy(n, m, xi, scale));
}

double predicted_delta(int n, std::size_t m, double xi, double scale) {
    return std::exp(log_predicted_discrepancy(n, m, xi, scale) - 0.5 * std::log(static_cast<double>(n)));
}

double ratio_bound(int k, int n, std::size_t m, double delta) {
    check_interior_k(k, n, "ratio_bound");
    const double rho = rho_k(k, n);
    return -(md(m) * (md(m) + 1.0) / 4.0) * std::log1p(-rho * rho) + std::abs(rho) * md(m) * delta * delta;
}

double log_ratio_remainder(const std::vector<double>& lam, const std::vector<double>& mu, double rho) {
    if (!(std::abs(rho) < 1.0)) throw CorrelationError("log_ratio_remainder: |rho| must be < 1");
    if (lam.size() != mu.size()) throw DimensionError("log_ratio_remainder: size mismatch");
    const std::size_t m = lam.size();
    double ll = 0.0;
    double uu = 0.0;
    double lu = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        ll += lam[i] * lam[i];
        uu += mu[i] * mu[i];
        lu += lam[i] * mu[i];
    }
    const double r2 = rho * rho;
    return -(md(m) * (md(m) + 1.0) / 4.0) * std::log1p(-r2) -
           (r2 * ll - 2.0 * rho * lu + r2 * uu) / (4.0 * (1.0 - r2));
}

RatioMaximizer ratio_bound_tight_point(int k, int n, double delta, std::size_t m) {
    check_interior_k(k, n, "ratio_bound_tight_point");
    const double rho = rho_k(k, n);
    RatioMaximizer out;
    out.nonnegative_correlation = rho >= 0.0;
    out.lambda.assign(m, delta);
    out.mu.assign(m, out.nonnegative_correlation ? delta : -delta);
    const double base = -(md(m) * (md(m) + 1.0) / 4.0) * std::log1p(-rho * rho);
    const double tilt = out.nonnegative_correlation ? rho * md(m) * delta * delta / (2.0 * (1.0 + rho))
                                                    : -rho * md(m) * delta * delta / (2.0 * (1.0 - rho));
    out.log_value = base + tilt;
    return out;
}

double first_moment_log(int n, std::size_t m, double epsilon, std::optional<double> xi) {
    if (n < 1) throw DomainError("first_moment_log: n must be >= 1");
    if (!(epsilon > 0.0)) throw DomainError("first_moment_log: epsilon must be > 0");
    const double delta = epsilon / std::sqrt(static_cast<double>(n));
    return static_cast<double>(n) * std::numbers::ln2 + log_probability(m, delta, xi);
}

MomentReport second_moment_terms(int n, std::size_t m, double delta, double eps_smooth, std::optional<double> xi) {
    if (n < 4) throw DomainError("second_moment_terms: n must be >= 4");
    if (!(delta > 0.0)) throw DomainError("second_moment_terms: delta must be > 0");
    if (!(eps_smooth > 0.0)) throw DomainError("second_moment_terms: eps_smooth must be > 0");

    MomentReport r;
    r.n = n;
    r.m = m;
    r.delta = delta;
    r.epsilon = std::sqrt(static_cast<double>(n)) * delta;
    r.log_small_norm_prob = log_probability(m, delta, xi);
    const double n_log2 = static_cast<double>(n) * std::numbers::ln2;
    r.log_first_moment = n_log2 + r.log_small_norm_prob;

    r.leading_first_k = (n + 3) / 4;
    r.leading_last_k = (3 * n) / 4;
    r.log_terms.resize(static_cast<std::size_t>(n) + 1);
    std::vector<double> leading;
    std::vector<double> lower;
    for (int k = 0; k <= n; ++k) {
        const double log_ratio = (k == 0 || k == n) ? -r.log_small_norm_prob : ratio_bound(k, n, m, delta);
        const double term = log_binomial(n, k) + log_ratio - n_log2;
        r.log_terms[static_cast<std::size_t>(k)] = term;
        (k >= r.leading_first_k && k <= r.leading_last_k ? leading : lower).push_back(term);
    }
    r.log_leading = log_sum_exp(leading);
    r.log_lower = log_sum_exp(lower);
    r.log_total = log_sum_exp(r.log_terms);
    r.leading_term = std::exp(r.log_leading);
    r.lower_term = std::exp(r.log_lower);
    r.log_second_moment_upper = 2.0 * r.log_first_moment + r.log_total;

    const AuxValues peak = aux_functions(0.5, {eps_smooth, n, m, delta});
    r.laplace_leading_estimate =
        std::exp(-n_log2 + static_cast<double>(n) * peak.phi - 0.5 * std::log(std::abs(peak.phi_second)));
    return r;
}

double binomial_tail_bound(int n, int t) {
    if (t < 1 || t > n) throw DomainError("binomial_tail_bound: need 1 <= t <= n");
    const double nd = static_cast<double>(n);
    const double td = static_cast<double>(t);
    return td * (1.0 + std::log(nd / td));
}

double binomial_log_approx(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1) throw DomainError("binomial_log_approx: need 1 <= k <= n-1");
    const int kk = std::min(k, n - k);
    const double nd = static_cast<double>(n);
    const double x = static_cast<double>(kk) / nd;
    const double y = static_cast<double>(n - kk) / nd;
    const double entropy = -x * std::log(x) - y * std::log(y);
    return nd * entropy - 0.5 * std::log(2.0 * std::numbers::pi * nd * x * y);
}

AuxValues aux_functions(double x, const AuxParams& p) {
    if (!(x >= 0.25 && x <= 0.75)) throw DomainError("aux_functions: x must lie in [1/4, 3/4]");
    if (!(p.eps_smooth > 0.0)) throw DomainError("aux_functions: eps_smooth must be > 0");
    if (p.n < 1 || p.m == 0) throw DomainError("aux_functions: n, m must be >= 1");
    const double nd = static_cast<double>(p.n);
    const double mm = md(p.m);
    const double u = 1.0 - 2.0 * x;
    const double w = 1.0 - x;
    const double s = u * u + p.eps_smooth;

    AuxValues v;
    v.f = std::sqrt(s);
    v.g = -std::log(x * w);
    v.h = -x * std::log(x) - w * std::log(w);

    const double corr_weight = mm * (mm + 1.0) / (4.0 * nd);
    const double tilt_weight = mm * p.delta * p.delta / nd;
    const double binom_weight = 1.0 / (2.0 * nd);
    v.phi = v.h + corr_weight * (v.g - std::log(4.0)) + tilt_weight * v.f + binom_weight * v.g;

    const double f2 = 4.0 * p.eps_smooth / (s * std::sqrt(s));
    const double g2 = (2.0 * x * x - 2.0 * x + 1.0) / (w * w * x * x);
    const double h2 = -1.0 / (x * w);
    v.phi_second = h2 + corr_weight * g2 + tilt_weight * f2 + binom_weight * g2;
    return v;
}

ExponentFunction moment_exponent(const AuxParams& params) {
    aux_functions(0.5, params);
    ExponentFunction phi;
    phi.a = 0.25;
    phi.b = 0.75;
    phi.y = 0.5;
    phi.evaluate = [params](double x) {
        const AuxValues v = aux_functions(x, params);
        return std::pair{v.phi, v.phi_second};
    };
    return phi;
}

}  // namespace goedisc
