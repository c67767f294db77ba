#pragma once

#include <cstdint>
#include <string>

#include "goedisc/random.hpp"
#include "goedisc/rmt.hpp"

namespace goedisc {

enum class SearchMode { exact, heuristic };

std::string to_string(SearchMode mode);
SearchMode parse_search_mode(const std::string& text);

struct SearchOptions {
    /// Largest n accepted by the exhaustive searches.
    int cap = 26;
    /// The running sum is rebuilt from scratch at Gray indices divisible by this.
    std::uint64_t refresh_interval = std::uint64_t{1} << 16;
    /// Incremental-vs-scratch comparison at Gray indices divisible by this; 0 disables.
    std::uint64_t audit_interval = std::uint64_t{1} << 12;
};

struct DiscrepancyResult {
    double value = 0.0;
    Signing argmin{0};
    std::uint64_t explored = 0;
    SearchMode mode = SearchMode::exact;
    /// Largest |incremental - from scratch| norm difference seen by the audit.
    double max_audit_drift = 0.0;
};

struct CountResult {
    std::uint64_t count = 0;
    double epsilon = 0.0;
    int n = 0;
    std::size_t m = 0;
};

/// Minimum spectral norm of sum_i x_i A_i over all signings with x_1 = +1,
/// visited in binary-reflected Gray order. Ties go to the lexicographically
/// smallest signing. Throws SearchCapError above options.cap.
DiscrepancyResult disc_exact(const MatrixEnsemble& ensemble, const SearchOptions& options = {});

/// disc_exact split over contiguous Gray-index blocks. Blocks are aligned to
/// the refresh interval, so the result does not depend on `workers`.
DiscrepancyResult disc_exact_parallel(const MatrixEnsemble& ensemble, int workers,
                                      const SearchOptions& options = {});

/// Steepest-descent single-flip search from `restarts` random signings, restart
/// r drawing from rng.substream(r). The returned value is an upper bound on
/// the discrepancy.
DiscrepancyResult disc_heuristic(const MatrixEnsemble& ensemble, int restarts, int max_iters,
                                 const RandomStream& rng);

/// Number of signings in {+1, -1}^n with ||sum_i x_i A_i|| <= epsilon.
CountResult count_low_disc(const MatrixEnsemble& ensemble, double epsilon, const SearchOptions& options = {});

/// Gray code of i: i ^ (i >> 1).
constexpr std::uint64_t gray_code(std::uint64_t i) noexcept { return i ^ (i >> 1); }

}  // namespace goedisc
