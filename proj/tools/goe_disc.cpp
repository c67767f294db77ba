#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "goedisc/error.hpp"
#include "goedisc/harness/config.hpp"
#include "goedisc/harness/emit.hpp"
#include "goedisc/harness/experiment.hpp"
#include "goedisc/harness/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kRuntimeFailure = 1;
constexpr int kValidation = 2;
constexpr int kSuiteFailure = 3;
constexpr int kIo = 4;

using namespace goedisc;
using namespace goedisc::harness;

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw DomainError("--n: '" + item + "' is not an integer");
        out.push_back(v);
    }
    if (out.empty()) throw DomainError("--n: empty list");
    return out;
}

int workers_from_env() {
    const char* env = std::getenv("GOE_DISC_WORKERS");
    if (env == nullptr || *env == '\0') return 1;
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(env, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || env[used] != '\0') throw DomainError(std::string("GOE_DISC_WORKERS: '") + env + "' is not an integer");
    return v;
}

int run(const ExperimentConfig& cfg) {
    switch (cfg.command) {
        case Command::disc:
        case Command::scaling: {
            const ScalingRun r = run_scaling_experiment(cfg);
            emit(prediction_table(r.records), cfg.format, cfg.out);
            std::cerr << "# summary: " << to_json(r.summary).dump() << '\n';
            for (const std::string& e : r.errors) std::cerr << "# error: " << e << '\n';
            return r.errors.empty() ? kOk : kRuntimeFailure;
        }
        case Command::verify: {
            const VerifyReport report = run_verify(cfg.suite, cfg.seed);
            emit(verify_table(report), cfg.format, cfg.out);
            return report.passed() ? kOk : kSuiteFailure;
        }
        case Command::sample: emit(sample_table(cfg), cfg.format, cfg.out); return kOk;
        case Command::predict: emit(predict_table(cfg), cfg.format, cfg.out); return kOk;
        case Command::calibrate_xi: emit(calibrate_table(cfg), cfg.format, cfg.out); return kOk;
        case Command::moments: emit(moments_table(cfg), cfg.format, cfg.out); return kOk;
        case Command::laplace: emit(laplace_table(cfg, std::cerr), cfg.format, cfg.out); return kOk;
    }
    return kRuntimeFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GOE matrix discrepancy experiments"};
    app.set_version_flag("--version", "goe-disc 0.1.0");

    std::string command;
    std::string suite = "all";
    std::string n_text;
    std::string mode = "exact";
    std::string format = "csv";
    ExperimentConfig cfg;
    int trials = 1;
    double delta = 0.0;
    int workers = 1;

    app.add_option("command", command,
                   "sample | disc | predict | calibrate-xi | moments | laplace | verify | scaling")
        ->required();
    app.add_option("suite", suite, "verify: densities | selberg | moments | ratio | laplace | eigensolver | all");
    app.add_option("--m", cfg.m, "matrix dimension")->capture_default_str();
    app.add_option("--n", n_text, "number of matrices; comma-separated list allowed");
    auto* trials_opt = app.add_option("--trials", trials, "trials per n");
    app.add_option("--seed", cfg.seed, "64-bit base seed")->capture_default_str();
    auto* delta_opt = app.add_option("--delta", delta, "per-matrix norm threshold (default: prediction scale)");
    app.add_option("--epsilon", cfg.epsilon, "total norm threshold")->capture_default_str();
    app.add_option("--gamma", cfg.gamma, "upper prediction constant")->capture_default_str();
    app.add_option("--beta", cfg.beta, "lower prediction constant")->capture_default_str();
    app.add_option("--mode", mode, "exact | heuristic")->capture_default_str();
    auto* workers_opt = app.add_option("--workers", workers, "worker threads (default: GOE_DISC_WORKERS or 1)");
    app.add_option("--out", cfg.out, "output file (default: stdout)");
    app.add_option("--format", format, "csv | json")->capture_default_str();
    app.add_option("--restarts", cfg.restarts, "heuristic restarts")->capture_default_str();
    app.add_option("--max-iters", cfg.max_iters, "heuristic descent steps per restart")->capture_default_str();
    app.add_option("--cap", cfg.cap, "largest n for exact search")->capture_default_str();
    app.add_flag("--timing", cfg.timing, "record wall-clock runtime_ms (rows then differ between runs)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kValidation;
    }

    try {
        cfg.command = parse_command(command);
        cfg.mode = parse_search_mode(mode);
        cfg.format = parse_format(format);
        cfg.suite = suite;
        if (!n_text.empty()) cfg.n = parse_n_list(n_text);
        if (trials_opt->count() > 0) cfg.trials = trials;
        if (delta_opt->count() > 0) cfg.delta = delta;
        cfg.workers = workers_opt->count() > 0 ? workers : workers_from_env();
        cfg = resolve(cfg);
        validate(cfg);
        if (cfg.command == Command::verify && suite != "all") {
            const auto& names = verify_suites();
            if (std::find(names.begin(), names.end(), suite) == names.end()) {
                throw DomainError("unknown verify suite '" + suite + "'");
            }
        }
    } catch (const ValidationError& e) {
        std::cerr << "goe-disc: " << e.what() << '\n';
        return kValidation;
    }

    std::cerr << "# config: " << to_json(cfg).dump() << '\n';
    try {
        return run(cfg);
    } catch (const ValidationError& e) {
        std::cerr << "goe-disc: " << e.what() << '\n';
        return kValidation;
    } catch (const IoError& e) {
        std::cerr << "goe-disc: " << e.what() << '\n';
        return kIo;
    } catch (const AccuracyNotMetError& e) {
        std::cerr << "goe-disc: " << e.what() << " (best estimate " << e.estimate() << ")\n";
        return kRuntimeFailure;
    } catch (const std::exception& e) {
        std::cerr << "goe-disc: " << e.what() << '\n';
        return kRuntimeFailure;
    }
}
