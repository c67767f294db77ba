#include "goedisc/densities.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "goedisc/error.hpp"
#include "goedisc/special.hpp"

namespace goedisc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double sum_of_squares(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_ordered(std::span<const double> v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] < v[i - 1]) return false;
    }
    return true;
}

void check_rho_open(double rho, const char* who) {
    if (!(std::abs(rho) < 1.0)) {
        throw CorrelationError(std::string(who) + ": |rho| must be < 1");
    }
}

// -(m(m+1)/4) log(1 - rho^2)
double correlation_log_factor(std::size_t m, double rho) {
    const double md = static_cast<double>(m);
    return -(md * (md + 1.0) / 4.0) * std::log1p(-rho * rho);
}

}  // namespace

bool LogDensityValue::is_zero() const noexcept { return log_value == kNegInf; }
double LogDensityValue::density() const noexcept { return std::exp(log_value); }

EnsembleConstants constants(std::size_t m) {
    if (m == 0) throw DimensionError("constants: m must be >= 1");
    const double md = static_cast<double>(m);
    const double log_k = -(md / 2.0) * std::numbers::ln2 -
                         (md * (md + 1.0) / 4.0) * std::log(2.0 * std::numbers::pi);
    double log_c = -(md * (md + 3.0) / 4.0) * std::numbers::ln2;
    for (std::size_t i = 1; i <= m; ++i) log_c -= log_gamma(static_cast<double>(i) / 2.0);
    return {m, log_k, log_c};
}

double vandermonde(std::span<const double> lam) {
    double p = 1.0;
    for (std::size_t i = 0; i < lam.size(); ++i) {
        for (std::size_t j = i + 1; j < lam.size(); ++j) p *= lam[j] - lam[i];
    }
    return p;
}

double log_abs_vandermonde(std::span<const double> lam) {
    double s = 0.0;
    for (std::size_t i = 0; i < lam.size(); ++i) {
        for (std::size_t j = i + 1; j < lam.size(); ++j) {
            const double d = lam[j] - lam[i];
            if (d == 0.0) return kNegInf;
            s += std::log(std::abs(d));
        }
    }
    return s;
}

LogDensityValue goe_matrix_log_density(const SymmetricMatrix& x) {
    if (!x.all_finite()) throw NumericInputError("goe_matrix_log_density: non-finite entry");
    return {constants(x.dim()).log_K - x.trace_of_square() / 4.0};
}

LogDensityValue pair_matrix_log_density(const SymmetricMatrix& x, const SymmetricMatrix& y, double rho) {
    check_rho_open(rho, "pair_matrix_log_density");
    if (x.dim() != y.dim()) throw DimensionError("pair_matrix_log_density: dimension mismatch");
    const EnsembleConstants c = constants(x.dim());
    if (rho == 0.0) {
        // Same arithmetic as the product of the two marginals.
        return {(c.log_K - x.trace_of_square() / 4.0) + (c.log_K - y.trace_of_square() / 4.0)};
    }
    const double quad = x.trace_of_square() - 2.0 * rho * trace_of_product(x, y) + y.trace_of_square();
    return {2.0 * c.log_K + correlation_log_factor(x.dim(), rho) - quad / (4.0 * (1.0 - rho * rho))};
}

LogDensityValue eigen_log_density(std::span<const double> lam) {
    if (lam.empty()) throw DimensionError("eigen_log_density: empty spectrum");
    if (!is_ordered(lam)) return {kNegInf};
    const double log_delta = log_abs_vandermonde(lam);
    if (log_delta == kNegInf) return {kNegInf};
    return {constants(lam.size()).log_C - sum_of_squares(lam) / 4.0 + log_delta};
}

LogDensityValue eigen_log_density(const Spectrum& lam) { return eigen_log_density(std::span<const double>(lam.values)); }

LogDensityValue eigen_pair_log_density(std::span<const double> lam, std::span<const double> mu, double rho) {
    check_rho_open(rho, "eigen_pair_log_density");
    if (lam.size() != mu.size() || lam.empty()) {
        throw DimensionError("eigen_pair_log_density: spectra must share a nonzero size");
    }
    if (rho == 0.0) {
        const LogDensityValue a = eigen_log_density(lam);
        const LogDensityValue b = eigen_log_density(mu);
        return {a.log_value + b.log_value};
    }
    if (!is_ordered(lam) || !is_ordered(mu)) return {kNegInf};
    const double log_delta = log_abs_vandermonde(lam) + log_abs_vandermonde(mu);
    if (log_delta == kNegInf) return {kNegInf};
    const std::size_t m = lam.size();
    const double quad = sum_of_squares(lam) - 2.0 * rho * dot(lam, mu) + sum_of_squares(mu);
    return {2.0 * constants(m).log_C + correlation_log_factor(m, rho) -
            quad / (4.0 * (1.0 - rho * rho)) + log_delta};
}

LogDensityValue eigen_pair_log_density(const Spectrum& lam, const Spectrum& mu, double rho) {
    return eigen_pair_log_density(std::span<const double>(lam.values), std::span<const double>(mu.values), rho);
}

double log_selberg_unit_cube(std::size_t m) {
    if (m == 0) throw DimensionError("selberg_unit_cube: m must be >= 1");
    const double md = static_cast<double>(m);
    const double log_gamma_half = log_gamma(0.5);
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double id = static_cast<double>(i);
        s += 2.0 * log_gamma((id + 2.0) / 2.0) + log_gamma((id + 1.0) / 2.0) -
             log_gamma((md + id + 3.0) / 2.0) - log_gamma_half;
    }
    return s;
}

double selberg_unit_cube(std::size_t m) { return std::exp(log_selberg_unit_cube(m)); }

}  // namespace goedisc
