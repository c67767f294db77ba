#include "goedisc/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "goedisc/error.hpp"
#include "goedisc/quadrature.hpp"

namespace goedisc {

namespace {

constexpr int kPeakGrid = 2000;
constexpr double kModulusWidths[] = {0.1, 0.05, 0.01};

}  // namespace

void validate_exponent(const ExponentFunction& phi) {
    if (!phi.evaluate) throw DomainError("exponent function has no evaluator");
    if (!(phi.a < phi.y && phi.y < phi.b)) throw DomainError("exponent function: need a < y < b");
    const double curvature = phi.evaluate(phi.y).second;
    if (!(curvature < 0.0)) {
        std::ostringstream os;
        os << "exponent function: phi''(y) = " << curvature << " is not a concave peak";
        throw DomainError(os.str());
    }
}

double laplace_closed_form(const ExponentFunction& phi, double n) {
    validate_exponent(phi);
    if (!(n > 0.0)) throw DomainError("laplace_closed_form: n must be > 0");
    const auto [value, curvature] = phi.evaluate(phi.y);
    return 0.5 * std::log(2.0 * std::numbers::pi / (n * std::abs(curvature))) + n * value;
}

double integrate_exp_n_phi(const ExponentFunction& phi, double n, double rel_tol) {
    if (!phi.evaluate || !(phi.a < phi.b)) throw DomainError("integrate_exp_n_phi: need an evaluator and a < b");
    if (!(n > 0.0)) throw DomainError("integrate_exp_n_phi: n must be > 0");
    double shift = n * phi.evaluate(phi.y).first;
    for (int i = 0; i <= kPeakGrid; ++i) {
        const double x = phi.a + (phi.b - phi.a) * i / kPeakGrid;
        shift = std::max(shift, n * phi.evaluate(x).first);
    }
    auto integrand = [&](double x) { return std::exp(n * phi.evaluate(x).first - shift); };
    const QuadratureOptions opts{0.0, rel_tol, 4000};
    const double split = std::clamp(phi.y, phi.a, phi.b);
    const QuadratureResult left = integrate_adaptive(integrand, phi.a, split, opts);
    const QuadratureResult right = integrate_adaptive(integrand, split, phi.b, opts);
    const double total = left.value + right.value;
    const double error = left.error + right.error;
    const double estimate = shift + std::log(total);
    if (!(error <= rel_tol * total)) {
        std::ostringstream os;
        os << "integrate_exp_n_phi: relative error " << error / total << " above " << rel_tol << " at n = " << n;
        throw AccuracyNotMetError(os.str(), estimate, error / total);
    }
    return estimate;
}

double peak_bound(const ExponentFunction& phi, double n) {
    return std::log(phi.b - phi.a) + n * phi.evaluate(phi.y).first;
}

double curvature_modulus(const ExponentFunction& phi, double width) {
    if (!(width > 0.0)) throw DomainError("curvature_modulus: width must be > 0");
    const double lo = std::max(phi.a, phi.y - width);
    const double hi = std::min(phi.b, phi.y + width);
    const double peak = phi.evaluate(phi.y).second;
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double x = lo + (hi - lo) * i / 200.0;
        worst = std::max(worst, std::abs(phi.evaluate(x).second - peak));
    }
    return worst;
}

bool LaplaceDecay::strictly_decreasing() const {
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (!(rows[i].relative_error < rows[i - 1].relative_error)) return false;
    }
    return true;
}

LaplaceDecay laplace_error_decay(const std::function<ExponentFunction(double)>& family,
                                 const std::vector<double>& n_list) {
    LaplaceDecay out;
    double previous_peak = 0.0;
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        const double n = n_list[i];
        const ExponentFunction phi = family(n);
        LaplaceComparison row;
        row.n = n;
        row.closed_form_log = laplace_closed_form(phi, n);
        row.quadrature_log = integrate_exp_n_phi(phi, n);
        row.relative_error = std::abs(std::expm1(row.quadrature_log - row.closed_form_log));
        row.peak_curvature = phi.evaluate(phi.y).second;

        // Uniform negative bound: the peak curvature must not drift toward zero.
        if (i > 0 && row.peak_curvature > 0.5 * previous_peak) {
            std::ostringstream os;
            os << "n = " << n << ": phi''(y) = " << row.peak_curvature << " drifts toward 0";
            out.warnings.push_back(os.str());
        }
        previous_peak = row.peak_curvature;

        double wider = std::numeric_limits<double>::infinity();
        for (double w : kModulusWidths) {
            const double modulus = curvature_modulus(phi, w);
            if (modulus > wider) {
                std::ostringstream os;
                os << "n = " << n << ": curvature modulus grows from " << wider << " to " << modulus
                   << " as the window shrinks to " << w;
                out.warnings.push_back(os.str());
            }
            wider = modulus;
        }
        out.rows.push_back(row);
    }
    return out;
}

}  // namespace goedisc
