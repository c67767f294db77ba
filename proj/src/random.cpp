#include "goedisc/random.hpp"

namespace goedisc {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t make_key(std::uint64_t seed, std::uint64_t stream) noexcept {
    return mix64(mix64(seed) ^ mix64(stream + kGolden) ^ 0xD1B54A32D192ED03ULL);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), key_(make_key(seed, stream)) {}

RandomStream RandomStream::substream(std::uint64_t index) const {
    return RandomStream(seed_, mix64(stream_ ^ mix64(index + 0x632BE59BD9B4E019ULL)));
}

RandomStream::result_type RandomStream::operator()() noexcept {
    ++counter_;
    return mix64(key_ + counter_ * kGolden);
}

double RandomStream::uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

}  // namespace goedisc
