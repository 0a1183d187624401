#include <jumpflood/flooding.hpp>
#include <jumpflood/metrics.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace jumpflood;

TEST(Similarity, Examples) {
    const VoronoiGrid a(8, std::vector<SeedId>(64, 0));
    EXPECT_DOUBLE_EQ(similarity(a, a), 100.0);
    EXPECT_DOUBLE_EQ(similarity(a, VoronoiGrid(8, std::vector<SeedId>(64, 1))), 0.0);

    std::vector<SeedId> claims(64, 0);
    for (int i = 0; i < 16; ++i) claims[static_cast<std::size_t>(i * 4)] = 3;
    const VoronoiGrid b(8, claims);
    EXPECT_DOUBLE_EQ(similarity(a, b), 75.0);
    EXPECT_DOUBLE_EQ(similarity(b, a), 75.0);
}

TEST(Similarity, EmptyMatchesOnlyEmpty) {
    const VoronoiGrid empty(4);
    EXPECT_DOUBLE_EQ(similarity(empty, empty), 100.0);
    EXPECT_DOUBLE_EQ(similarity(empty, VoronoiGrid(4, std::vector<SeedId>(16, 0))), 0.0);
}

TEST(Similarity, RejectsSizeMismatch) {
    EXPECT_THROW(similarity(VoronoiGrid(4), VoronoiGrid(5)), std::invalid_argument);
}

TEST(Speedup, Examples) {
    EXPECT_DOUBLE_EQ(speedup(10.0, 2.0), 5.0);
    EXPECT_DOUBLE_EQ(speedup(1.0, 1.0), 1.0);
    EXPECT_THROW(speedup(0.0, 1.0), std::invalid_argument);
    EXPECT_THROW(speedup(1.0, -2.0), std::invalid_argument);
}

TEST(RegionLengthHistogram, SingleSeedSpansGrid) {
    const SeedSet seeds(100, std::vector<Point>{{40, 60}});
    const auto grid = run_exact(seeds, DistanceMetric::Euclidean);
    const auto lengths = region_lengths(grid, seeds.size());
    ASSERT_EQ(lengths.size(), 1u);
    EXPECT_DOUBLE_EQ(lengths[0], 100.0);
    const auto h = region_length_histogram(grid, seeds.size(), 1.0);
    EXPECT_EQ(h.counts.size(), 1u);
    EXPECT_EQ(h.counts.at(100), 1);
}

TEST(RegionLengthHistogram, SymmetricQuadrantsHaveEqualLengths) {
    // One seed at the center of each 5x5 quadrant of a 10x10 grid.
    const SeedSet seeds(10, std::vector<Point>{{2, 2}, {7, 2}, {2, 7}, {7, 7}});
    const auto lengths = region_lengths(run_exact(seeds, DistanceMetric::Euclidean), seeds.size());
    ASSERT_EQ(lengths.size(), 4u);
    for (const double l : lengths) EXPECT_DOUBLE_EQ(l, 5.0);
}

TEST(RegionLengthHistogram, TotalCountsOwningSeedsOnly) {
    // Seeds 1 and 2 share a pixel with lower ids; they own nothing.
    const SeedSet seeds(20, std::vector<Point>{{3, 3}, {3, 3}, {3, 3}, {15, 12}});
    const auto h = region_length_histogram(run_exact(seeds, DistanceMetric::Euclidean), seeds.size(), 2.5);
    EXPECT_EQ(h.total(), 2);
    EXPECT_DOUBLE_EQ(h.bin_width, 2.5);
}

TEST(RegionLengthHistogram, RejectsIncompleteGridAndBadWidth) {
    const SeedSet seeds(8, std::vector<Point>{{1, 1}});
    EXPECT_THROW(region_length_histogram(stamp_seeds(seeds), 1, 1.0), std::invalid_argument);
    EXPECT_THROW(region_length_histogram(run_exact(seeds, DistanceMetric::Euclidean), 1, 0.0),
                 std::invalid_argument);
}

TEST(Histogram, SinglePeakTolerance) {
    Histogram h;
    h.counts = {{0, 1}, {1, 5}, {2, 5}, {3, 2}};
    EXPECT_TRUE(h.single_peak(1));
    EXPECT_FALSE(h.single_peak(0));
    h.counts = {{0, 5}, {1, 1}, {2, 5}};
    EXPECT_FALSE(h.single_peak(1));
    EXPECT_FALSE(Histogram{}.single_peak());
}

TEST(CumulativeTimes, SumsPerAlgorithm) {
    std::vector<MetricsRecord> records(3);
    for (auto& r : records) {
        r.algorithm = "jfa";
        r.elapsed_seconds = 1.0;
    }
    EXPECT_DOUBLE_EQ(cumulative_times(records).at("jfa"), 3.0);
    EXPECT_TRUE(cumulative_times(std::vector<MetricsRecord>{}).empty());

    records.push_back({});
    records.back().algorithm = "djfa-euclidean";
    records.back().elapsed_seconds = 0.25;
    const auto totals = cumulative_times(records);
    EXPECT_EQ(totals.size(), 2u);
    EXPECT_DOUBLE_EQ(totals.at("djfa-euclidean"), 0.25);
}
