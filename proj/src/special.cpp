#include "goedisc/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "goedisc/error.hpp"

namespace goedisc {

namespace {

constexpr double kStirlingShift = 15.0;

// Bernoulli-number coefficients B_{2k} / (2k (2k-1)) of the Stirling series.
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
};

double stirling_log_gamma(double z) {
    const double inv = 1.0 / z;
    const double inv2 = inv * inv;
    double series = 0.0;
    double power = inv;
    for (double c : kStirling) {
        series += c * power;
        power *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

}  // namespace

double log_gamma(double z) {
    if (!(z > 0.0) || !std::isfinite(z)) {
        throw DomainError("log_gamma: argument must be finite and > 0, got " + std::to_string(z));
    }
    if (z == 1.0 || z == 2.0) {
        return 0.0;
    }
    if (z >= kStirlingShift) {
        return stirling_log_gamma(z);
    }
    // log Gamma(z) = log Gamma(z + k) - log(z (z+1) ... (z+k-1))
    double product = 1.0;
    double shifted = z;
    while (shifted < kStirlingShift) {
        product *= shifted;
        shifted += 1.0;
    }
    return stirling_log_gamma(shifted) - std::log(product);
}

double log_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        throw DomainError("log_binomial: need 0 <= k <= n");
    }
    if (k == 0 || k == n) {
        return 0.0;
    }
    const int j = std::min(k, n - k);
    return log_gamma(n + 1.0) - log_gamma(j + 1.0) - log_gamma(n - j + 1.0);
}

double log_add_exp(double a, double b) noexcept {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double hi = a > b ? a : b;
    const double lo = a > b ? b : a;
    return hi + std::log1p(std::exp(lo - hi));
}

double log_sum_exp(std::span<const double> values) {
    if (values.empty()) {
        return -std::numeric_limits<double>::infinity();
    }
    std::vector<double> level(values.begin(), values.end());
    while (level.size() > 1) {
        std::vector<double> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
            next.push_back(log_add_exp(level[i], level[i + 1]));
        }
        if (level.size() % 2 == 1) {
            next.push_back(level.back());
        }
        level = std::move(next);
    }
    return level.front();
}

}  // namespace goedisc
