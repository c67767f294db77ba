#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "goedisc/random.hpp"
#include "goedisc/symmetric_matrix.hpp"

namespace goedisc {

/// n independent matrices sharing one dimension m.
class MatrixEnsemble {
public:
    explicit MatrixEnsemble(std::vector<SymmetricMatrix> matrices);

    std::size_t size() const noexcept { return matrices_.size(); }
    std::size_t dim() const noexcept { return matrices_.front().dim(); }
    const SymmetricMatrix& operator[](std::size_t i) const noexcept { return matrices_[i]; }
    const std::vector<SymmetricMatrix>& matrices() const noexcept { return matrices_; }

    auto begin() const noexcept { return matrices_.begin(); }
    auto end() const noexcept { return matrices_.end(); }

    /// Copy with every member multiplied by c.
    MatrixEnsemble scaled(double c) const;

private:
    std::vector<SymmetricMatrix> matrices_;
};

/// A sign vector x in {+1, -1}^n; bit true means +1.
class Signing {
public:
    explicit Signing(std::size_t n, bool all_plus = true) : bits_(n, all_plus) {}
    explicit Signing(std::vector<bool> bits) : bits_(std::move(bits)) {}

    /// Signing with x_1 = +1 and the remaining n-1 signs read from `pattern`:
    /// bit j of pattern set means coordinate j+1 is -1.
    static Signing from_pattern(std::size_t n, std::uint64_t pattern);

    std::size_t size() const noexcept { return bits_.size(); }
    bool plus(std::size_t i) const noexcept { return bits_[i]; }
    double sign(std::size_t i) const noexcept { return bits_[i] ? 1.0 : -1.0; }
    void flip(std::size_t i) noexcept { bits_[i] = !bits_[i]; }
    const std::vector<bool>& bits() const noexcept { return bits_; }

    Signing negated() const;
    /// Representative of {x, -x} with x_1 = +1.
    Signing canonical() const;
    /// "+-+..." rendering.
    std::string to_string() const;

    friend bool operator==(const Signing&, const Signing&) = default;

private:
    std::vector<bool> bits_;
};

/// Lexicographic order on sign patterns, '-' before '+' (false < true).
bool lexicographically_less(const Signing& a, const Signing& b);

/// GOE sample: diagonal ~ N(0, 2), strict upper triangle ~ N(0, 1).
SymmetricMatrix sample_goe(std::size_t m, RandomStream& rng);

MatrixEnsemble sample_ensemble(std::size_t n, std::size_t m, RandomStream& rng);

/// (X, Y) with Y = rho X + sqrt(1 - rho^2) Z for an independent GOE Z.
std::pair<SymmetricMatrix, SymmetricMatrix> sample_correlated_pair(std::size_t m, double rho,
                                                                   RandomStream& rng);

/// sum_i x_i A_i, divided by sqrt(n) when `normalize` is set.
SymmetricMatrix signed_sum(const MatrixEnsemble& ensemble, const Signing& x, bool normalize = false);

/// Signed sum after flipping coordinate i whose current sign is old_sign:
/// sum - 2 old_sign a_i.
SymmetricMatrix flip_update(const SymmetricMatrix& sum, const SymmetricMatrix& a_i, double old_sign);

/// In-place form used by the enumerators.
void flip_update_in_place(SymmetricMatrix& sum, const SymmetricMatrix& a_i, double old_sign);

}  // namespace goedisc
