#include "goedisc/random.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

using goedisc::RandomStream;

TEST(RandomStream, SameKeyReproducesSequence) {
    RandomStream a(42, 7);
    RandomStream b(42, 7);
    for (int i = 0; i < 1000; ++i) ASSERT_EQ(a(), b());
    EXPECT_EQ(a.counter(), 1000u);
}

TEST(RandomStream, SeedAndStreamBothMatter) {
    RandomStream base(1, 0);
    RandomStream other_seed(2, 0);
    RandomStream other_stream(1, 1);
    const auto x = base();
    EXPECT_NE(x, other_seed());
    EXPECT_NE(x, other_stream());
}

TEST(RandomStream, SubstreamIsPureFunctionOfParentKeyAndIndex) {
    RandomStream parent(9, 3);
    RandomStream advanced(9, 3);
    for (int i = 0; i < 17; ++i) advanced();
    RandomStream c1 = parent.substream(5);
    RandomStream c2 = advanced.substream(5);
    for (int i = 0; i < 100; ++i) ASSERT_EQ(c1(), c2());

    std::set<std::uint64_t> firsts;
    for (std::uint64_t k = 0; k < 1000; ++k) firsts.insert(parent.substream(k)());
    EXPECT_EQ(firsts.size(), 1000u);
}

TEST(RandomStream, UniformMomentsAndRange) {
    RandomStream rng(123, 0);
    constexpr int kDraws = 1'000'000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < kDraws; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
        sum_sq += u * u;
    }
    const double mean = sum / kDraws;
    EXPECT_NEAR(mean, 0.5, 5 * std::sqrt(1.0 / 12.0 / kDraws));
    EXPECT_NEAR(sum_sq / kDraws - mean * mean, 1.0 / 12.0, 1e-3);
}

TEST(RandomStream, PlugsIntoStandardDistributions) {
    RandomStream rng(5, 5);
    std::normal_distribution<double> normal;
    constexpr int kDraws = 400'000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < kDraws; ++i) {
        const double z = normal(rng);
        sum += z;
        sum_sq += z * z;
    }
    EXPECT_NEAR(sum / kDraws, 0.0, 0.01);
    EXPECT_NEAR(sum_sq / kDraws, 1.0, 0.01);
}
