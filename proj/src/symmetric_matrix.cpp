#include "goedisc/symmetric_matrix.hpp"

#include <cmath>

#include "goedisc/error.hpp"

namespace goedisc {

SymmetricMatrix::SymmetricMatrix(std::size_t dim) : dim_(dim), data_(dim * (dim + 1) / 2, 0.0) {
    if (dim == 0) {
        throw DimensionError("SymmetricMatrix: dimension must be >= 1");
    }
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t dim) {
    SymmetricMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> values) {
    SymmetricMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m.at(i, i) = values[i];
    return m;
}

SymmetricMatrix SymmetricMatrix::from_dense(std::size_t dim, std::span<const double> row_major) {
    if (row_major.size() != dim * dim) {
        throw DimensionError("from_dense: expected dim*dim entries");
    }
    SymmetricMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i; j < dim; ++j) m.at(i, j) = row_major[i * dim + j];
    }
    return m;
}

double SymmetricMatrix::trace() const noexcept {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double SymmetricMatrix::trace_of_square() const noexcept {
    double diag = 0.0;
    double off = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        diag += (*this)(i, i) * (*this)(i, i);
        for (std::size_t j = i + 1; j < dim_; ++j) off += (*this)(i, j) * (*this)(i, j);
    }
    return diag + 2.0 * off;
}

double SymmetricMatrix::frobenius_norm() const noexcept { return std::sqrt(trace_of_square()); }

bool SymmetricMatrix::all_finite() const noexcept {
    for (double v : data_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

std::vector<double> SymmetricMatrix::to_dense() const {
    std::vector<double> out(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) out[i * dim_ + j] = (*this)(i, j);
    }
    return out;
}

SymmetricMatrix& SymmetricMatrix::operator+=(const SymmetricMatrix& other) {
    return add_scaled(1.0, other);
}

SymmetricMatrix& SymmetricMatrix::operator-=(const SymmetricMatrix& other) {
    if (other.dim_ != dim_) throw DimensionError("SymmetricMatrix: dimension mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

SymmetricMatrix& SymmetricMatrix::operator*=(double c) noexcept {
    for (double& v : data_) v *= c;
    return *this;
}

SymmetricMatrix& SymmetricMatrix::add_scaled(double c, const SymmetricMatrix& other) {
    if (other.dim_ != dim_) throw DimensionError("SymmetricMatrix: dimension mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += c * other.data_[k];
    return *this;
}

SymmetricMatrix operator+(SymmetricMatrix a, const SymmetricMatrix& b) { return a += b; }
SymmetricMatrix operator-(SymmetricMatrix a, const SymmetricMatrix& b) { return a -= b; }
SymmetricMatrix operator*(double c, SymmetricMatrix a) { return a *= c; }
SymmetricMatrix operator-(SymmetricMatrix a) { return a *= -1.0; }

double trace_of_product(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionError("trace_of_product: dimension mismatch");
    double diag = 0.0;
    double off = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        diag += a(i, i) * b(i, i);
        for (std::size_t j = i + 1; j < a.dim(); ++j) off += a(i, j) * b(i, j);
    }
    return diag + 2.0 * off;
}

SymmetricMatrix conjugate(const SymmetricMatrix& a, std::span<const double> q) {
    const std::size_t m = a.dim();
    if (q.size() != m * m) throw DimensionError("conjugate: Q must be m x m");
    // tmp = Q A
    std::vector<double> tmp(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            const double qik = q[i * m + k];
            for (std::size_t j = 0; j < m; ++j) tmp[i * m + j] += qik * a(k, j);
        }
    }
    SymmetricMatrix out(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < m; ++k) s += tmp[i * m + k] * q[j * m + k];
            out.at(i, j) = s;
        }
    }
    return out;
}

}  // namespace goedisc
