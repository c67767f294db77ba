#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace goedisc {

/// Dense real symmetric matrix holding only the upper triangle, so the
/// logical entries (i, j) and (j, i) share one storage cell.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(std::size_t dim);

    static SymmetricMatrix zeros(std::size_t dim) { return SymmetricMatrix(dim); }
    static SymmetricMatrix identity(std::size_t dim);
    static SymmetricMatrix diagonal(std::span<const double> values);
    /// Builds from a row-major m x m array, reading the upper triangle only.
    static SymmetricMatrix from_dense(std::size_t dim, std::span<const double> row_major);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t packed_size() const noexcept { return data_.size(); }

    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[index(i, j)]; }
    double& at(std::size_t i, std::size_t j) noexcept { return data_[index(i, j)]; }

    std::span<const double> packed() const noexcept { return data_; }
    std::span<double> packed() noexcept { return data_; }

    double trace() const noexcept;
    /// Frobenius norm over all m^2 logical entries.
    double frobenius_norm() const noexcept;
    /// tr(A^2), which equals the squared Frobenius norm.
    double trace_of_square() const noexcept;
    bool all_finite() const noexcept;

    std::vector<double> to_dense() const;

    SymmetricMatrix& operator+=(const SymmetricMatrix& other);
    SymmetricMatrix& operator-=(const SymmetricMatrix& other);
    SymmetricMatrix& operator*=(double c) noexcept;
    /// this += c * other
    SymmetricMatrix& add_scaled(double c, const SymmetricMatrix& other);

    friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
    std::size_t index(std::size_t i, std::size_t j) const noexcept {
        if (i > j) {
            const std::size_t t = i;
            i = j;
            j = t;
        }
        // Row-major packed upper triangle.
        return i * dim_ - i * (i + 1) / 2 + j;
    }

    std::size_t dim_;
    std::vector<double> data_;
};

SymmetricMatrix operator+(SymmetricMatrix a, const SymmetricMatrix& b);
SymmetricMatrix operator-(SymmetricMatrix a, const SymmetricMatrix& b);
SymmetricMatrix operator*(double c, SymmetricMatrix a);
SymmetricMatrix operator-(SymmetricMatrix a);

/// tr(A B) for symmetric A, B of equal dimension.
double trace_of_product(const SymmetricMatrix& a, const SymmetricMatrix& b);

/// Q A Q^T for a row-major m x m matrix Q.
SymmetricMatrix conjugate(const SymmetricMatrix& a, std::span<const double> q_row_major);

}  // namespace goedisc
