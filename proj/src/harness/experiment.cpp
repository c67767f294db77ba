#include "goedisc/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>

#include "goedisc/discrepancy.hpp"
#include "goedisc/eigen.hpp"
#include "goedisc/error.hpp"
#include "goedisc/laplace.hpp"
#include "goedisc/theory.hpp"

namespace goedisc::harness {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct TrialJob {
    int n;
    int trial;
};

int reference_n(const std::vector<int>& ns) {
    const double mean = std::accumulate(ns.begin(), ns.end(), 0.0) / static_cast<double>(ns.size());
    return static_cast<int>(std::lround(mean));
}

double laplace_delta(const ExperimentConfig& c) { return c.delta.value_or(0.1); }

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, int n, int trial) {
    RandomStream s = RandomStream(seed, static_cast<std::uint64_t>(n)).substream(static_cast<std::uint64_t>(trial));
    return s();
}

MatrixEnsemble trial_ensemble(int n, std::size_t m, std::uint64_t seed) {
    RandomStream rng(seed, 0);
    return sample_ensemble(static_cast<std::size_t>(n), m, rng);
}

double median(std::vector<double> values) {
    std::erase_if(values, [](double v) { return std::isnan(v); });
    if (values.empty()) return kNaN;
    std::sort(values.begin(), values.end());
    const std::size_t h = values.size() / 2;
    return values.size() % 2 ? values[h] : 0.5 * (values[h - 1] + values[h]);
}

LineFit fit_line(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) throw DomainError("fit_line: need two or more paired points");
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw DomainError("fit_line: abscissae are all equal");
    return {sxy / sxx, my - (sxy / sxx) * mx};
}

ScalingRun run_scaling_experiment(const ExperimentConfig& config) {
    const ExperimentConfig c = resolve(config);
    validate(c);
    const int trials = *c.trials;

    ScalingRun run;
    ScalingSummary& s = run.summary;
    s.m = c.m;
    s.xi_reference_n = reference_n(c.n);
    const XiCalibration cal = calibrate_xi_fixed_point(c.m, s.xi_reference_n);
    s.xi_hat = cal.xi_hat;
    s.xi_converged = cal.converged;
    s.upper_bounds_only = c.mode == SearchMode::heuristic;
    s.expected_slope = -s.xi_hat * std::log(4.0) / static_cast<double>(c.m * c.m);

    std::vector<TrialJob> jobs;
    for (int n : c.n) {
        for (int t = 0; t < trials; ++t) jobs.push_back({n, t});
    }
    run.records.resize(jobs.size());
    std::vector<std::string> job_errors(jobs.size());

    // Few jobs: parallelise inside the search instead of across trials.
    const bool across_trials = c.workers > 1 && jobs.size() >= static_cast<std::size_t>(c.workers);
    const int inner_workers = across_trials ? 1 : c.workers;
    SearchOptions options;
    options.cap = c.cap;

    auto run_job = [&](std::size_t index) {
        const TrialJob job = jobs[index];
        PredictionRecord& r = run.records[index];
        r.n = job.n;
        r.m = c.m;
        r.trial = job.trial;
        r.seed = trial_seed(c.seed, job.n, job.trial);
        r.xi_hat = s.xi_hat;
        r.predicted = predicted_discrepancy(job.n, c.m, s.xi_hat, c.gamma);
        const auto start = std::chrono::steady_clock::now();
        try {
            const MatrixEnsemble ensemble = trial_ensemble(job.n, c.m, r.seed);
            const DiscrepancyResult d =
                c.mode == SearchMode::exact
                    ? disc_exact_parallel(ensemble, inner_workers, options)
                    : disc_heuristic(ensemble, c.restarts, c.max_iters, RandomStream(r.seed, 1));
            r.disc = d.value;
            r.ratio = r.disc / r.predicted;
        } catch (const std::exception& e) {
            r.disc = kNaN;
            r.ratio = kNaN;
            job_errors[index] = "n = " + std::to_string(job.n) + ", trial " + std::to_string(job.trial) + ": " + e.what();
        }
        if (c.timing) {
            r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                               .count();
        }
    };

    if (across_trials) {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (int w = 0; w < c.workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < jobs.size(); i = next++) run_job(i);
            });
        }
    } else {
        for (std::size_t i = 0; i < jobs.size(); ++i) run_job(i);
    }

    for (auto& e : job_errors) {
        if (!e.empty()) {
            run.errors.push_back(std::move(e));
            ++s.failed_trials;
        }
    }

    std::vector<double> xs;
    std::vector<double> ys;
    for (int n : c.n) {
        ScalingPoint p;
        p.n = n;
        p.predicted = predicted_discrepancy(n, c.m, s.xi_hat, c.gamma);
        std::vector<double> discs;
        std::vector<double> ratios;
        std::vector<double> logs;
        int in_band = 0;
        const double base = p.predicted / c.gamma;
        for (const PredictionRecord& r : run.records) {
            if (r.n != n || std::isnan(r.disc)) continue;
            discs.push_back(r.disc);
            ratios.push_back(r.ratio);
            logs.push_back(std::log(r.disc / std::sqrt(static_cast<double>(n) * static_cast<double>(c.m))));
            if (r.disc >= c.beta * base && r.disc <= c.gamma * base) ++in_band;
        }
        p.trials = static_cast<int>(discs.size());
        p.median_disc = median(discs);
        p.median_ratio = median(ratios);
        p.median_log_normalized = median(logs);
        p.band_fraction = p.trials ? static_cast<double>(in_band) / p.trials : kNaN;
        if (p.trials > 0 && std::isfinite(p.median_log_normalized)) {
            xs.push_back(static_cast<double>(n));
            ys.push_back(p.median_log_normalized);
        }
        s.points.push_back(p);
    }
    const bool distinct = xs.size() >= 2 && std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) != xs.end();
    s.fitted_slope = distinct ? fit_line(xs, ys).slope : kNaN;
    return run;
}

nlohmann::ordered_json to_json(const ScalingSummary& s) {
    auto real = [](double v) { return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr); };
    nlohmann::ordered_json j;
    j["m"] = s.m;
    j["xi_hat"] = real(s.xi_hat);
    j["xi_reference_n"] = s.xi_reference_n;
    j["xi_converged"] = s.xi_converged;
    j["values"] = s.upper_bounds_only ? "upper_bounds" : "exact";
    j["fitted_slope"] = real(s.fitted_slope);
    j["expected_slope"] = real(s.expected_slope);
    j["failed_trials"] = s.failed_trials;
    auto& points = j["points"] = nlohmann::ordered_json::array();
    for (const ScalingPoint& p : s.points) {
        nlohmann::ordered_json o;
        o["n"] = p.n;
        o["trials"] = p.trials;
        o["median_disc"] = real(p.median_disc);
        o["predicted"] = real(p.predicted);
        o["median_ratio"] = real(p.median_ratio);
        o["median_log_normalized"] = real(p.median_log_normalized);
        o["band_fraction"] = real(p.band_fraction);
        points.push_back(o);
    }
    return j;
}

Table sample_table(const ExperimentConfig& config) {
    const ExperimentConfig c = resolve(config);
    validate(c);
    Table t;
    t.columns = {"trial", "index", "seed", "m", "spectral_norm", "normalized_norm", "lambda_min", "lambda_max"};
    for (int n : c.n) {
        for (int trial = 0; trial < *c.trials; ++trial) {
            const std::uint64_t seed = trial_seed(c.seed, n, trial);
            const MatrixEnsemble ensemble = trial_ensemble(n, c.m, seed);
            for (std::size_t i = 0; i < ensemble.size(); ++i) {
                const Spectrum spec = symmetric_eigenvalues(ensemble[i]);
                const double norm = std::max(std::abs(spec.min()), std::abs(spec.max()));
                t.rows.push_back({std::int64_t{trial}, static_cast<std::int64_t>(i), seed, static_cast<std::int64_t>(c.m),
                                  norm, norm / std::sqrt(static_cast<double>(c.m)), spec.min(), spec.max()});
            }
        }
    }
    return t;
}

Table predict_table(const ExperimentConfig& config) {
    const ExperimentConfig c = resolve(config);
    validate(c);
    Table t;
    t.columns = {"n", "m", "xi_hat", "gamma", "predicted", "predicted_delta", "iterations", "converged"};
    for (int n : c.n) {
        const XiCalibration cal = calibrate_xi_fixed_point(c.m, n);
        t.rows.push_back({std::int64_t{n}, static_cast<std::int64_t>(c.m), cal.xi_hat, c.gamma,
                          predicted_discrepancy(n, c.m, cal.xi_hat, c.gamma),
                          predicted_delta(n, c.m, cal.xi_hat, c.gamma), std::int64_t{cal.iterations}, cal.converged});
    }
    return t;
}

Table calibrate_table(const ExperimentConfig& config) {
    const ExperimentConfig c = resolve(config);
    validate(c);
    Table t;
    t.columns = {"m", "n", "delta_ref", "xi_hat", "iterations", "converged"};
    auto add = [&](int n, const XiCalibration& cal) {
        t.rows.push_back({static_cast<std::int64_t>(c.m), std::int64_t{n}, cal.delta_ref, cal.xi_hat,
                          std::int64_t{cal.iterations}, cal.converged});
    };
    if (c.delta) {
        // n = 0 marks a direct calibration at the given delta.
        add(0, calibrate_xi(c.m, *c.delta));
    } else {
        for (int n : c.n) add(n, calibrate_xi_fixed_point(c.m, n));
    }
    return t;
}

Table moments_table(const ExperimentConfig& config) {
    const ExperimentConfig c = resolve(config);
    validate(c);
    Table t;
    t.columns = {"n",     "m",       "delta",           "epsilon",           "xi_hat",
                 "log_first_moment", "total",           "leading",           "lower",
                 "laplace_leading",  "lower_reference", "log_second_moment_upper"};
    for (int n : c.n) {
        const XiCalibration cal = calibrate_xi_fixed_point(c.m, n);
        const double delta = c.delta.value_or(predicted_delta(n, c.m, cal.xi_hat, c.gamma));
        const MomentReport r = second_moment_terms(n, c.m, delta);
        const double md = static_cast<double>(c.m);
        const double lower_reference = 2.0 * std::pow(c.gamma, -md * md / (2.0 * cal.xi_hat));
        t.rows.push_back({std::int64_t{n}, static_cast<std::int64_t>(c.m), delta, r.epsilon, cal.xi_hat,
                          r.log_first_moment, std::exp(r.log_total), r.leading_term, r.lower_term,
                          r.laplace_leading_estimate, lower_reference, r.log_second_moment_upper});
    }
    return t;
}

Table laplace_table(const ExperimentConfig& config, std::ostream& log) {
    const ExperimentConfig c = resolve(config);
    validate(c);
    std::vector<double> ns(c.n.begin(), c.n.end());
    Table t;
    t.columns = {"family", "n", "closed_form_log", "quadrature_log", "relative_error"};
    auto add = [&](const std::string& name, const LaplaceDecay& decay) {
        for (const LaplaceComparison& row : decay.rows) {
            t.rows.push_back({name, static_cast<std::int64_t>(row.n), row.closed_form_log, row.quadrature_log,
                              row.relative_error});
        }
        for (const std::string& w : decay.warnings) log << "# warning: " << name << ": " << w << '\n';
    };
    add("quadratic", laplace_error_decay(
                         [](double) {
                             return ExponentFunction{[](double x) {
                                                         const double d = x - 0.5;
                                                         return std::pair{-d * d, -2.0};
                                                     },
                                                     0.0, 1.0, 0.5};
                         },
                         ns));
    const double delta = laplace_delta(c);
    add("moment_exponent", laplace_error_decay(
                               [&](double n) {
                                   return moment_exponent({kDefaultSmoothing, static_cast<int>(n), c.m, delta});
                               },
                               ns));
    return t;
}

}  // namespace goedisc::harness
