#pragma once

#include <span>

namespace goedisc {

/// log Gamma(z) for z > 0 via the Stirling series, after shifting the argument
/// upward with the recurrence Gamma(z+1) = z Gamma(z).
/// Throws DomainError for z <= 0 or non-finite z.
double log_gamma(double z);

/// log C(n, k) through log_gamma.
double log_binomial(int n, int k);

/// log(exp(a) + exp(b)), tolerating -inf.
double log_add_exp(double a, double b) noexcept;

/// log sum_i exp(v_i) by pairwise reduction in a fixed order, so the result
/// does not depend on how callers partition the terms. Empty input gives -inf.
double log_sum_exp(std::span<const double> values);

}  // namespace goedisc
