#include "goedisc/discrepancy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "goedisc/eigen.hpp"
#include "goedisc/error.hpp"

namespace goedisc {

namespace {

double running_norm(const SymmetricMatrix& s) {
    if (s.dim() == 2) {
        const auto p = s.packed();
        return spectral_norm_2x2(p[0], p[1], p[2]);
    }
    return spectral_norm(s);
}

std::uint64_t half_space_size(std::size_t n) { return std::uint64_t{1} << (n - 1); }

void check_exhaustive(const MatrixEnsemble& ensemble, const SearchOptions& options) {
    if (options.cap < 1 || options.cap > 40) throw DomainError("search cap must lie in [1, 40]");
    if (options.refresh_interval == 0 || !std::has_single_bit(options.refresh_interval)) {
        throw DomainError("refresh interval must be a power of two");
    }
    if (ensemble.size() > static_cast<std::size_t>(options.cap)) {
        throw SearchCapError("exhaustive search refused: n = " + std::to_string(ensemble.size()) +
                             " exceeds the cap of " + std::to_string(options.cap) +
                             "; use heuristic mode for larger n");
    }
}

// Signing order on canonical patterns: at the first differing coordinate the
// pattern holding -1 (bit set) is smaller.
bool pattern_less(std::uint64_t p, std::uint64_t q) {
    const std::uint64_t diff = p ^ q;
    return diff != 0 && (p & (diff & (~diff + 1))) != 0;
}

struct BlockBest {
    double value = std::numeric_limits<double>::infinity();
    std::uint64_t pattern = 0;
    double drift = 0.0;

    void offer(double v, std::uint64_t pattern_in) {
        if (v < value || (v == value && pattern_less(pattern_in, pattern))) {
            value = v;
            pattern = pattern_in;
        }
    }
    void merge(const BlockBest& other) {
        offer(other.value, other.pattern);
        drift = std::max(drift, other.drift);
    }
};

// Walks Gray indices [first, last), calling visit(pattern, norm) for each.
// Returns the largest audit drift.
template <class Visit>
double scan(const MatrixEnsemble& ensemble, std::uint64_t first, std::uint64_t last, const SearchOptions& options,
            Visit&& visit) {
    const std::size_t n = ensemble.size();
    SymmetricMatrix sum(ensemble.dim());
    double drift = 0.0;
    for (std::uint64_t i = first; i < last; ++i) {
        const std::uint64_t pattern = gray_code(i);
        if (i == first || i % options.refresh_interval == 0) {
            sum = signed_sum(ensemble, Signing::from_pattern(n, pattern));
        } else {
            const int bit = std::countr_zero(i);
            const double old_sign = (pattern >> bit) & 1U ? 1.0 : -1.0;
            flip_update_in_place(sum, ensemble[static_cast<std::size_t>(bit) + 1], old_sign);
        }
        const double norm = running_norm(sum);
        if (options.audit_interval != 0 && i % options.audit_interval == 0 && i != first &&
            i % options.refresh_interval != 0) {
            const double scratch = running_norm(signed_sum(ensemble, Signing::from_pattern(n, pattern)));
            drift = std::max(drift, std::abs(norm - scratch));
        }
        visit(pattern, norm);
    }
    return drift;
}

template <class Block>
void run_blocks(std::uint64_t total, std::uint64_t chunk, int workers, Block&& block) {
    const std::uint64_t chunks = (total + chunk - 1) / chunk;
    const std::uint64_t used = std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), chunks);
    if (used <= 1) {
        block(0, 0, total);
        return;
    }
    std::vector<std::jthread> threads;
    threads.reserve(used);
    for (std::uint64_t w = 0; w < used; ++w) {
        const std::uint64_t first = std::min(total, (w * chunks / used) * chunk);
        const std::uint64_t last = std::min(total, ((w + 1) * chunks / used) * chunk);
        threads.emplace_back([&block, w, first, last] { block(w, first, last); });
    }
}

DiscrepancyResult finish(const MatrixEnsemble& ensemble, const BlockBest& best, std::uint64_t explored) {
    DiscrepancyResult out;
    out.argmin = Signing::from_pattern(ensemble.size(), best.pattern);
    out.value = spectral_norm(signed_sum(ensemble, out.argmin));
    out.explored = explored;
    out.mode = SearchMode::exact;
    out.max_audit_drift = best.drift;
    return out;
}

}  // namespace

std::string to_string(SearchMode mode) { return mode == SearchMode::exact ? "exact" : "heuristic"; }

SearchMode parse_search_mode(const std::string& text) {
    if (text == "exact") return SearchMode::exact;
    if (text == "heuristic") return SearchMode::heuristic;
    throw DomainError("unknown search mode '" + text + "' (expected exact or heuristic)");
}

DiscrepancyResult disc_exact(const MatrixEnsemble& ensemble, const SearchOptions& options) {
    return disc_exact_parallel(ensemble, 1, options);
}

DiscrepancyResult disc_exact_parallel(const MatrixEnsemble& ensemble, int workers, const SearchOptions& options) {
    if (workers < 1) throw DomainError("disc_exact_parallel: workers must be >= 1");
    check_exhaustive(ensemble, options);
    const std::uint64_t total = half_space_size(ensemble.size());
    std::vector<BlockBest> blocks(static_cast<std::size_t>(workers));
    run_blocks(total, options.refresh_interval, workers,
               [&](std::uint64_t w, std::uint64_t first, std::uint64_t last) {
                   BlockBest& best = blocks[w];
                   best.drift = scan(ensemble, first, last, options,
                                     [&best](std::uint64_t pattern, double norm) { best.offer(norm, pattern); });
               });
    BlockBest merged;
    for (const BlockBest& b : blocks) merged.merge(b);
    return finish(ensemble, merged, total);
}

CountResult count_low_disc(const MatrixEnsemble& ensemble, double epsilon, const SearchOptions& options) {
    if (std::isnan(epsilon) || epsilon < 0.0) throw DomainError("count_low_disc: epsilon must be >= 0");
    check_exhaustive(ensemble, options);
    std::uint64_t half = 0;
    scan(ensemble, 0, half_space_size(ensemble.size()), options, [&](std::uint64_t, double norm) {
        if (norm <= epsilon) ++half;
    });
    return {2 * half, epsilon, static_cast<int>(ensemble.size()), ensemble.dim()};
}

DiscrepancyResult disc_heuristic(const MatrixEnsemble& ensemble, int restarts, int max_iters,
                                 const RandomStream& rng) {
    if (restarts < 1 || max_iters < 1) throw DomainError("disc_heuristic: restarts and max_iters must be >= 1");
    const std::size_t n = ensemble.size();
    double best_value = std::numeric_limits<double>::infinity();
    Signing best(n);
    std::uint64_t explored = 0;
    SymmetricMatrix trial(ensemble.dim());

    for (int r = 0; r < restarts; ++r) {
        RandomStream stream = rng.substream(static_cast<std::uint64_t>(r));
        Signing x(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (stream() >> 63) x.flip(i);
        }
        SymmetricMatrix sum = signed_sum(ensemble, x);
        double current = running_norm(sum);
        ++explored;
        for (int it = 0; it < max_iters; ++it) {
            std::size_t chosen = n;
            double chosen_value = current;
            for (std::size_t j = 0; j < n; ++j) {
                trial = sum;
                flip_update_in_place(trial, ensemble[j], x.sign(j));
                const double v = running_norm(trial);
                ++explored;
                if (v < chosen_value) {
                    chosen_value = v;
                    chosen = j;
                }
            }
            if (chosen == n) break;
            flip_update_in_place(sum, ensemble[chosen], x.sign(chosen));
            x.flip(chosen);
            current = chosen_value;
        }
        const Signing canon = x.canonical();
        if (current < best_value || (current == best_value && lexicographically_less(canon, best))) {
            best_value = current;
            best = canon;
        }
    }

    DiscrepancyResult out;
    out.argmin = best;
    out.value = spectral_norm(signed_sum(ensemble, best));
    out.explored = explored;
    out.mode = SearchMode::heuristic;
    return out;
}

}  // namespace goedisc
