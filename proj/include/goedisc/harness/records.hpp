#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace goedisc::harness {

struct PredictionRecord {
    int n = 0;
    std::size_t m = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    double disc = 0.0;
    double predicted = 0.0;
    double xi_hat = 0.0;
    /// disc / predicted
    double ratio = 0.0;
    std::int64_t runtime_ms = 0;

    friend bool operator==(const PredictionRecord&, const PredictionRecord&) = default;
};

using Cell = std::variant<std::int64_t, std::uint64_t, double, bool, std::string>;

/// Column-named rows; every command's output goes through one of these.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

}  // namespace goedisc::harness
