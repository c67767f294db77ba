#pragma once

#include <cmath>
#include <vector>

#include "goedisc/symmetric_matrix.hpp"

namespace goedisc {

inline constexpr double kDefaultEigenTolerance = 1e-12;

/// Eigenvalues in nondecreasing order together with the solver tolerance.
struct Spectrum {
    std::vector<double> values;
    double tol = kDefaultEigenTolerance;
    int sweeps = 0;

    std::size_t size() const noexcept { return values.size(); }
    double min() const { return values.front(); }
    double max() const { return values.back(); }
};

/// Cyclic Jacobi. Rotates until the largest off-diagonal magnitude is at
/// most tol * ||A||_F, then sorts the diagonal ascending.
/// Throws NumericInputError on non-finite input, DomainError for tol <= 0.
Spectrum symmetric_eigenvalues(const SymmetricMatrix& a, double tol = kDefaultEigenTolerance);

/// max(|lambda_1|, |lambda_m|).
double spectral_norm(const SymmetricMatrix& a, double tol = kDefaultEigenTolerance);

/// Closed-form spectral norm of [[a, b], [b, d]]: |t| + sqrt(((a-d)/2)^2 + b^2)
/// with t = (a+d)/2. Hot path of the m = 2 exhaustive search.
inline double spectral_norm_2x2(double a, double b, double d) noexcept {
    const double half_gap = 0.5 * (a - d);
    return std::abs(0.5 * (a + d)) + std::sqrt(half_gap * half_gap + b * b);
}

}  // namespace goedisc
