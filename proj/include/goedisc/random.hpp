#pragma once

#include <cstdint>
#include <limits>

namespace goedisc {

/// Counter-based random stream keyed by (seed, stream id).
///
/// Draw k of a stream is a pure function of (seed, stream, k), so substreams
/// can be handed to workers in any order and still reproduce the same
/// numbers. Satisfies UniformRandomBitGenerator, so it plugs into the
/// standard <random> distributions.
class RandomStream {
public:
    using result_type = std::uint64_t;

    RandomStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }
    std::uint64_t counter() const noexcept { return counter_; }

    /// Independent child stream; same (parent, index) always yields the same child.
    RandomStream substream(std::uint64_t index) const;

    result_type operator()() noexcept;

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace goedisc
