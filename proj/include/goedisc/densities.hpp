#pragma once

#include <cstddef>
#include <span>

#include "goedisc/eigen.hpp"
#include "goedisc/symmetric_matrix.hpp"

namespace goedisc {

/// Natural log of a nonnegative density value; -inf encodes zero, never NaN.
struct LogDensityValue {
    double log_value;

    bool is_zero() const noexcept;
    double density() const noexcept;
};

/// Log normalisers of the GOE matrix density (K_m) and of its ordered
/// eigenvalue density (C_m).
struct EnsembleConstants {
    std::size_t m;
    double log_K;
    double log_C;
};

/// log K_m = -(m/2) log 2 - (m(m+1)/4) log(2 pi)
/// log C_m = -(m(m+3)/4) log 2 - sum_{i=1}^m log Gamma(i/2)
EnsembleConstants constants(std::size_t m);

/// prod_{i<j} (lam_j - lam_i); 1 for fewer than two entries.
double vandermonde(std::span<const double> lam);

/// log |prod_{i<j} (lam_j - lam_i)|, -inf on ties.
double log_abs_vandermonde(std::span<const double> lam);

/// log K_m - tr(X^2)/4
LogDensityValue goe_matrix_log_density(const SymmetricMatrix& x);

/// Joint density of a GOE pair with entrywise correlation rho in (-1, 1).
LogDensityValue pair_matrix_log_density(const SymmetricMatrix& x, const SymmetricMatrix& y, double rho);

/// Ordered-eigenvalue density: log C_m - |lam|^2/4 + log Delta(lam).
/// Unordered input or ties map to -inf.
LogDensityValue eigen_log_density(std::span<const double> lam);
LogDensityValue eigen_log_density(const Spectrum& lam);

/// Joint ordered-eigenvalue density of a correlated GOE pair.
LogDensityValue eigen_pair_log_density(std::span<const double> lam, std::span<const double> mu, double rho);
LogDensityValue eigen_pair_log_density(const Spectrum& lam, const Spectrum& mu, double rho);

/// (1/m!) int_{[0,1]^m} |Delta(lam)| dlam in closed form:
/// prod_{i=0}^{m-1} Gamma((i+2)/2)^2 Gamma((i+1)/2) / (Gamma((m+i+3)/2) Gamma(1/2)).
double selberg_unit_cube(std::size_t m);
double log_selberg_unit_cube(std::size_t m);

}  // namespace goedisc
