#include "goedisc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "goedisc/error.hpp"

namespace goedisc {

namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
// Odd indices of kKronrodNodes are the Gauss nodes; index 10 is the centre.
constexpr double kKronrodNodes[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0,
};
constexpr double kKronrodWeights[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
};
constexpr double kGaussWeights[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod_21(const std::function<double(double)>& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f_centre = f(centre);
    double kronrod = kKronrodWeights[10] * f_centre;
    double gauss = 0.0;
    double abs_sum = std::abs(kronrod);
    double fv1[10];
    double fv2[10];
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kKronrodNodes[j];
        fv1[j] = f(centre - dx);
        fv2[j] = f(centre + dx);
        const double pair = fv1[j] + fv2[j];
        kronrod += kKronrodWeights[j] * pair;
        abs_sum += kKronrodWeights[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
        if (j % 2 == 1) {
            gauss += kGaussWeights[j / 2] * pair;
        }
    }
    const double mean = 0.5 * kronrod;
    double asc = kKronrodWeights[10] * std::abs(f_centre - mean);
    for (int j = 0; j < 10; ++j) {
        asc += kKronrodWeights[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
    }
    const double value = kronrod * half;
    const double res_abs = abs_sum * std::abs(half);
    const double res_asc = asc * std::abs(half);
    double error = std::abs((kronrod - gauss) * half);
    if (res_asc != 0.0 && error != 0.0) {
        error = res_asc * std::min(1.0, std::pow(200.0 * error / res_asc, 1.5));
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps)) {
        error = std::max(50.0 * eps * res_abs, error);
    }
    return {a, b, value, error};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& options) {
    QuadratureResult result;
    if (a == b) {
        result.converged = true;
        return result;
    }
    std::priority_queue<Panel> panels;
    Panel first = gauss_kronrod_21(f, a, b);
    double total = first.value;
    double total_error = first.error;
    panels.push(first);
    int count = 1;
    auto target = [&] { return std::max(options.abs_tol, options.rel_tol * std::abs(total)); };
    while (total_error > target() && count < options.max_intervals) {
        const Panel worst = panels.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) {
            break;  // panel no longer representable
        }
        panels.pop();
        const Panel left = gauss_kronrod_21(f, worst.a, mid);
        const Panel right = gauss_kronrod_21(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++count;
    }
    // Re-sum from the panels to shed the drift of the running update.
    total = 0.0;
    total_error = 0.0;
    std::vector<Panel> all;
    all.reserve(panels.size());
    while (!panels.empty()) {
        all.push_back(panels.top());
        panels.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    for (const Panel& p : all) {
        total += p.value;
        total_error += p.error;
    }
    result.value = total;
    result.error = total_error;
    result.intervals = count;
    result.converged = total_error <= target();
    return result;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& options) {
    const QuadratureResult r = integrate_adaptive(f, a, b, options);
    if (!r.converged) {
        throw AccuracyNotMetError("adaptive quadrature did not reach tolerance", r.value, r.error);
    }
    return r.value;
}

}  // namespace goedisc
