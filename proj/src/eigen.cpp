#include "goedisc/eigen.hpp"

#include <algorithm>
#include <cmath>

#include "goedisc/error.hpp"

namespace goedisc {

namespace {

constexpr int kMaxSweeps = 100;

}  // namespace

Spectrum symmetric_eigenvalues(const SymmetricMatrix& a, double tol) {
    if (!(tol > 0.0)) throw DomainError("symmetric_eigenvalues: tol must be > 0");
    if (!a.all_finite()) throw NumericInputError("symmetric_eigenvalues: non-finite entry");

    const std::size_t m = a.dim();
    std::vector<double> w = a.to_dense();
    auto el = [&](std::size_t i, std::size_t j) -> double& { return w[i * m + j]; };

    const double threshold = tol * a.frobenius_norm();
    Spectrum out;
    out.tol = tol;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) off = std::max(off, std::abs(el(p, q)));
        }
        if (off <= threshold) break;
        out.sweeps = sweep + 1;
        for (std::size_t p = 0; p + 1 < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                const double apq = el(p, q);
                if (apq == 0.0) continue;
                const double app = el(p, p);
                const double aqq = el(q, q);
                // Rotation angle that annihilates (p, q); smaller root for stability.
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                el(p, p) = app - t * apq;
                el(q, q) = aqq + t * apq;
                el(p, q) = el(q, p) = 0.0;
                for (std::size_t r = 0; r < m; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = el(r, p);
                    const double arq = el(r, q);
                    el(r, p) = el(p, r) = c * arp - s * arq;
                    el(r, q) = el(q, r) = s * arp + c * arq;
                }
            }
        }
    }
    out.values.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.values[i] = el(i, i);
    std::sort(out.values.begin(), out.values.end());
    return out;
}

double spectral_norm(const SymmetricMatrix& a, double tol) {
    const Spectrum s = symmetric_eigenvalues(a, tol);
    return std::max(std::abs(s.min()), std::abs(s.max()));
}

}  // namespace goedisc
