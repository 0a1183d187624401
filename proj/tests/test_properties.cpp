#include "invariants.hpp"

#include <gtest/gtest.h>

using namespace jumpflood;

namespace {

constexpr int kCases = 1000;

void run_cases(oracle::CheckResult (*check)(std::mt19937_64&), std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < kCases; ++i) {
        const auto failure = check(rng);
        ASSERT_FALSE(failure.has_value()) << "case " << i << ": " << *failure;
    }
}

}  // namespace

TEST(Properties, MonotoneProgressAndDistanceNonIncrease) { run_cases(oracle::check_monotone_waves, 1); }

TEST(Properties, RegionsPartitionGrid) { run_cases(oracle::check_partition, 2); }

TEST(Properties, SimilaritySymmetryAndIdentity) { run_cases(oracle::check_similarity_laws, 3); }

TEST(Properties, GatherEqualsScatterOnEightByEight) { run_cases(oracle::check_gather_scatter, 4); }
