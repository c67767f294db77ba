#pragma once

#include <functional>

namespace goedisc {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_intervals = 2000;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    int intervals = 0;
    bool converged = false;
};

/// Globally adaptive 21-point Gauss-Kronrod quadrature: the panel with the
/// largest error estimate is bisected until the summed estimate is below
/// max(abs_tol, rel_tol * |value|) or the panel budget runs out.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& options = {});

/// Same, but throws AccuracyNotMetError when the tolerance was not reached.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& options = {});

}  // namespace goedisc
