#include "goedisc/harness/config.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "goedisc/error.hpp"
#include "goedisc/theory.hpp"

namespace goedisc::harness {

namespace {

constexpr std::array<std::pair<Command, const char*>, 8> kCommands{{
    {Command::sample, "sample"},
    {Command::disc, "disc"},
    {Command::predict, "predict"},
    {Command::calibrate_xi, "calibrate-xi"},
    {Command::moments, "moments"},
    {Command::laplace, "laplace"},
    {Command::verify, "verify"},
    {Command::scaling, "scaling"},
}};

std::vector<int> default_n(Command command) {
    switch (command) {
        case Command::sample: return {1};
        case Command::disc: return {12};
        case Command::calibrate_xi: return {18};
        case Command::moments: return {40, 100, 200};
        case Command::laplace: return {100, 1000, 10000};
        case Command::predict:
        case Command::scaling: return {12, 16, 20, 24};
        case Command::verify: return {};
    }
    return {};
}

void require(bool ok, const std::string& message) {
    if (!ok) throw DomainError(message);
}

void require_exact_dimension(const ExperimentConfig& c) {
    if (c.m > 3) {
        throw UnsupportedDimensionError(to_string(c.command) +
                                        ": the exact small-norm probability is available for m <= 3 only");
    }
}

}  // namespace

std::string to_string(Command command) {
    for (const auto& [value, name] : kCommands) {
        if (value == command) return name;
    }
    return "unknown";
}

Command parse_command(const std::string& text) {
    for (const auto& [value, name] : kCommands) {
        if (text == name) return value;
    }
    throw DomainError("unknown command '" + text + "'");
}

std::string to_string(OutputFormat format) { return format == OutputFormat::csv ? "csv" : "json"; }

OutputFormat parse_format(const std::string& text) {
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    throw DomainError("unknown format '" + text + "' (expected csv or json)");
}

ExperimentConfig resolve(ExperimentConfig config) {
    if (config.n.empty()) config.n = default_n(config.command);
    if (!config.trials) config.trials = config.command == Command::scaling ? 50 : 1;
    return config;
}

void validate(const ExperimentConfig& c) {
    require(c.m >= 1, "--m must be >= 1");
    require(*c.trials >= 1, "--trials must be >= 1");
    require(c.workers >= 1, "--workers must be >= 1");
    require(c.restarts >= 1 && c.max_iters >= 1, "restarts and max-iters must be >= 1");
    require(c.cap >= 1 && c.cap <= 40, "--cap must lie in [1, 40]");
    require(std::isfinite(c.epsilon) && c.epsilon > 0.0, "--epsilon must be finite and > 0");
    require(std::isfinite(c.gamma) && c.gamma > 0.0, "--gamma must be finite and > 0");
    require(std::isfinite(c.beta) && c.beta > 0.0 && c.beta <= c.gamma, "--beta must satisfy 0 < beta <= gamma");
    if (c.delta) require(std::isfinite(*c.delta) && *c.delta > 0.0, "--delta must be finite and > 0");
    for (int n : c.n) require(n >= 1, "--n entries must be >= 1");

    switch (c.command) {
        case Command::disc:
        case Command::scaling:
            for (int n : c.n) {
                if (c.mode == SearchMode::exact && n > c.cap) {
                    throw SearchCapError("n = " + std::to_string(n) + " exceeds the exact-search cap of " +
                                         std::to_string(c.cap) + "; rerun with --mode heuristic");
                }
                require(n <= 62, "--n must be <= 62");
            }
            if (c.command == Command::scaling) require_exact_dimension(c);
            break;
        case Command::predict:
        case Command::calibrate_xi:
            require_exact_dimension(c);
            if (c.delta) {
                require(*c.delta < small_norm_boundary(c.m) - 1e-6,
                        "--delta must lie below the small-norm boundary 2 sqrt(m) e^{-3/4}");
            }
            break;
        case Command::moments:
            require_exact_dimension(c);
            for (int n : c.n) require(n >= 4, "moments: --n entries must be >= 4");
            break;
        case Command::laplace:
            for (int n : c.n) require(n >= 1, "laplace: --n entries must be >= 1");
            if (c.delta) require(*c.delta < 10.0, "laplace: --delta must be < 10");
            break;
        case Command::sample:
        case Command::verify:
            break;
    }
}

nlohmann::ordered_json to_json(const ExperimentConfig& c) {
    nlohmann::ordered_json j;
    j["command"] = to_string(c.command);
    j["m"] = c.m;
    j["n"] = c.n;
    j["trials"] = c.trials ? nlohmann::ordered_json(*c.trials) : nlohmann::ordered_json(nullptr);
    j["seed"] = c.seed;
    j["delta"] = c.delta ? nlohmann::ordered_json(*c.delta) : nlohmann::ordered_json(nullptr);
    j["epsilon"] = c.epsilon;
    j["gamma"] = c.gamma;
    j["beta"] = c.beta;
    j["mode"] = to_string(c.mode);
    j["workers"] = c.workers;
    j["out"] = c.out;
    j["format"] = to_string(c.format);
    j["suite"] = c.suite;
    j["restarts"] = c.restarts;
    j["max_iters"] = c.max_iters;
    j["cap"] = c.cap;
    j["timing"] = c.timing;
    return j;
}

}  // namespace goedisc::harness
