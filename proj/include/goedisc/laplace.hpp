#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace goedisc {

/// phi on [a, b] with a caller-supplied interior maximiser y. The evaluator
/// returns (phi(x), phi''(x)) and must be safe to call concurrently.
struct ExponentFunction {
    std::function<std::pair<double, double>(double)> evaluate;
    double a = 0.0;
    double b = 1.0;
    double y = 0.5;
};

/// Throws DomainError unless a < y < b and phi''(y) < 0.
void validate_exponent(const ExponentFunction& phi);

/// log of sqrt(2 pi / (n |phi''(y)|)) exp(n phi(y)).
double laplace_closed_form(const ExponentFunction& phi, double n);

/// log int_a^b exp(n phi(x)) dx. The integrand is shifted by the largest
/// grid value of n phi and split at y. Throws AccuracyNotMetError (with the
/// log estimate) when the relative target is missed.
double integrate_exp_n_phi(const ExponentFunction& phi, double n, double rel_tol = 1e-10);

/// log((b - a) exp(n phi(y))); the quadrature never exceeds it.
double peak_bound(const ExponentFunction& phi, double n);

/// max |phi''(x) - phi''(y)| over a 201-point grid on [y - w, y + w] clipped to [a, b].
double curvature_modulus(const ExponentFunction& phi, double width);

struct LaplaceComparison {
    double n = 0.0;
    double closed_form_log = 0.0;
    double quadrature_log = 0.0;
    double relative_error = 0.0;
    double peak_curvature = 0.0;
};

struct LaplaceDecay {
    std::vector<LaplaceComparison> rows;
    /// Failed grid checks of the concavity and equicontinuity hypotheses.
    std::vector<std::string> warnings;
    bool strictly_decreasing() const;
};

/// Relative error |quadrature - closed form| / closed form for each n.
/// Hypothesis checks that fail are reported as warnings, not errors.
LaplaceDecay laplace_error_decay(const std::function<ExponentFunction(double)>& family,
                                 const std::vector<double>& n_list);

}  // namespace goedisc
