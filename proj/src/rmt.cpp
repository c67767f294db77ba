#include "goedisc/rmt.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "goedisc/error.hpp"

namespace goedisc {

MatrixEnsemble::MatrixEnsemble(std::vector<SymmetricMatrix> matrices) : matrices_(std::move(matrices)) {
    if (matrices_.empty()) {
        throw DimensionError("MatrixEnsemble: need at least one matrix");
    }
    const std::size_t m = matrices_.front().dim();
    for (const auto& a : matrices_) {
        if (a.dim() != m) throw DimensionError("MatrixEnsemble: members differ in dimension");
    }
}

MatrixEnsemble MatrixEnsemble::scaled(double c) const {
    std::vector<SymmetricMatrix> out;
    out.reserve(matrices_.size());
    for (const auto& a : matrices_) out.push_back(c * a);
    return MatrixEnsemble(std::move(out));
}

Signing Signing::from_pattern(std::size_t n, std::uint64_t pattern) {
    Signing x(n);
    for (std::size_t j = 1; j < n; ++j) {
        if ((pattern >> (j - 1)) & 1U) x.bits_[j] = false;
    }
    return x;
}

Signing Signing::negated() const {
    Signing out(*this);
    out.bits_.flip();
    return out;
}

Signing Signing::canonical() const {
    if (bits_.empty() || bits_.front()) return *this;
    return negated();
}

std::string Signing::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (bool b : bits_) s.push_back(b ? '+' : '-');
    return s;
}

bool lexicographically_less(const Signing& a, const Signing& b) {
    return a.bits() < b.bits();
}

SymmetricMatrix sample_goe(std::size_t m, RandomStream& rng) {
    if (m == 0) throw DimensionError("sample_goe: dimension must be >= 1");
    std::normal_distribution<double> normal(0.0, 1.0);
    SymmetricMatrix x(m);
    for (std::size_t i = 0; i < m; ++i) {
        x.at(i, i) = std::numbers::sqrt2 * normal(rng);
        for (std::size_t j = i + 1; j < m; ++j) x.at(i, j) = normal(rng);
    }
    return x;
}

MatrixEnsemble sample_ensemble(std::size_t n, std::size_t m, RandomStream& rng) {
    if (n == 0) throw DimensionError("sample_ensemble: n must be >= 1");
    std::vector<SymmetricMatrix> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample_goe(m, rng));
    return MatrixEnsemble(std::move(out));
}

std::pair<SymmetricMatrix, SymmetricMatrix> sample_correlated_pair(std::size_t m, double rho,
                                                                   RandomStream& rng) {
    if (!(std::abs(rho) <= 1.0)) {
        throw CorrelationError("sample_correlated_pair: |rho| must be <= 1");
    }
    SymmetricMatrix x = sample_goe(m, rng);
    const SymmetricMatrix z = sample_goe(m, rng);
    SymmetricMatrix y = rho * x;
    y.add_scaled(std::sqrt(1.0 - rho * rho), z);
    return {std::move(x), std::move(y)};
}

SymmetricMatrix signed_sum(const MatrixEnsemble& ensemble, const Signing& x, bool normalize) {
    if (x.size() != ensemble.size()) {
        throw DimensionError("signed_sum: signing length differs from ensemble size");
    }
    SymmetricMatrix sum(ensemble.dim());
    for (std::size_t i = 0; i < ensemble.size(); ++i) sum.add_scaled(x.sign(i), ensemble[i]);
    if (normalize) sum *= 1.0 / std::sqrt(static_cast<double>(ensemble.size()));
    return sum;
}

void flip_update_in_place(SymmetricMatrix& sum, const SymmetricMatrix& a_i, double old_sign) {
    if (sum.dim() != a_i.dim()) throw DimensionError("flip_update: dimension mismatch");
    sum.add_scaled(-2.0 * old_sign, a_i);
}

SymmetricMatrix flip_update(const SymmetricMatrix& sum, const SymmetricMatrix& a_i, double old_sign) {
    SymmetricMatrix out(sum);
    flip_update_in_place(out, a_i, old_sign);
    return out;
}

}  // namespace goedisc
