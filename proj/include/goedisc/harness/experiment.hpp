#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "goedisc/harness/config.hpp"
#include "goedisc/harness/records.hpp"
#include "goedisc/rmt.hpp"
#include "json.hpp"

namespace goedisc::harness {

/// Seed recorded in each output row; trial_ensemble(n, m, seed) rebuilds the instance.
std::uint64_t trial_seed(std::uint64_t seed, int n, int trial);
MatrixEnsemble trial_ensemble(int n, std::size_t m, std::uint64_t trial_seed);

struct ScalingPoint {
    int n = 0;
    int trials = 0;
    double median_disc = 0.0;
    double predicted = 0.0;
    double median_ratio = 0.0;
    /// median over trials of log(disc / sqrt(n m))
    double median_log_normalized = 0.0;
    /// share of trials with beta * base <= disc <= gamma * base
    double band_fraction = 0.0;
};

struct ScalingSummary {
    std::size_t m = 0;
    double xi_hat = 0.0;
    int xi_reference_n = 0;
    bool xi_converged = false;
    /// Heuristic values are upper bounds on the discrepancy.
    bool upper_bounds_only = false;
    std::vector<ScalingPoint> points;
    double fitted_slope = 0.0;
    /// -xi_hat log 4 / m^2
    double expected_slope = 0.0;
    int failed_trials = 0;
};

struct ScalingRun {
    std::vector<PredictionRecord> records;
    ScalingSummary summary;
    std::vector<std::string> errors;
};

/// One row per (n, trial) in input order. xi_hat comes from the fixed-point
/// calibration at the rounded mean of the n list and is shared by all rows.
/// A trial that throws leaves a NaN row and an entry in `errors`.
ScalingRun run_scaling_experiment(const ExperimentConfig& config);

nlohmann::ordered_json to_json(const ScalingSummary& summary);

double median(std::vector<double> values);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Ordinary least squares; needs two distinct abscissae.
LineFit fit_line(std::span<const double> xs, std::span<const double> ys);

/// Per-command tables. Diagnostics go to `log`.
Table sample_table(const ExperimentConfig& config);
Table predict_table(const ExperimentConfig& config);
Table calibrate_table(const ExperimentConfig& config);
Table moments_table(const ExperimentConfig& config);
Table laplace_table(const ExperimentConfig& config, std::ostream& log);

}  // namespace goedisc::harness
