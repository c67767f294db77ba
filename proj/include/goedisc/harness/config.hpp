#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goedisc/discrepancy.hpp"
#include "json.hpp"

namespace goedisc::harness {

enum class Command { sample, disc, predict, calibrate_xi, moments, laplace, verify, scaling };
enum class OutputFormat { csv, json };

std::string to_string(Command command);
Command parse_command(const std::string& text);
std::string to_string(OutputFormat format);
OutputFormat parse_format(const std::string& text);

struct ExperimentConfig {
    Command command = Command::scaling;
    std::size_t m = 2;
    /// Empty means the command default.
    std::vector<int> n;
    std::optional<int> trials;
    std::uint64_t seed = 0;
    /// Unset means the per-n prediction scale where a command needs one.
    std::optional<double> delta;
    double epsilon = 1.0;
    double gamma = 1.0;
    double beta = 1.0;
    SearchMode mode = SearchMode::exact;
    int workers = 1;
    std::string out;
    OutputFormat format = OutputFormat::csv;
    std::string suite = "all";
    int restarts = 20;
    int max_iters = 1000;
    int cap = 26;
    bool timing = false;
};

/// Fills command defaults for n and trials.
ExperimentConfig resolve(ExperimentConfig config);

/// Throws a ValidationError subclass for any parameter outside the target
/// operation's preconditions. Expects a resolved config.
void validate(const ExperimentConfig& config);

nlohmann::ordered_json to_json(const ExperimentConfig& config);

}  // namespace goedisc::harness
