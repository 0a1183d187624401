// The AVX2 wave kernel and threaded row bands must reproduce the scalar
// reference bit for bit.

#include <jumpflood/kernels.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace jumpflood;

namespace {

VoronoiGrid apply(const VoronoiGrid& in, const SeedSet& seeds, const std::vector<Offset>& offsets, DistanceMetric m,
                  const ExecPolicy& policy) {
    VoronoiGrid out(in.n());
    WaveArgs args;
    args.n = in.n();
    args.in = in.claims();
    args.out = out.claims();
    args.seed_x = seeds.xs();
    args.seed_y = seeds.ys();
    args.offsets = offsets;
    args.metric = m;
    args.row_begin = 0;
    args.row_end = in.n();
    run_wave(args, policy);
    return out;
}

}  // namespace

TEST(WaveKernels, Avx2MatchesScalarOnRandomStates) {
    if (!isa_available(KernelIsa::Avx2)) GTEST_SKIP() << "AVX2 not available";
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 70);
        const int s = 1 + static_cast<int>(rng() % 50);
        const auto seeds = oracle::random_seeds(rng, n, s);
        const double empty_fraction = (trial % 4) * 0.3;
        const auto in = oracle::random_claims(rng, n, s, empty_fraction);
        const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n + 8));
        const auto nb = trial % 2 ? Neighborhood::Moore : Neighborhood::VonNeumann;
        const auto m = trial % 3 ? DistanceMetric::Euclidean : DistanceMetric::Manhattan;
        const auto offsets = neighbor_offsets(nb, k);
        const auto scalar = apply(in, seeds, offsets, m, {KernelIsa::Scalar, 1});
        const auto avx2 = apply(in, seeds, offsets, m, {KernelIsa::Avx2, 1});
        ASSERT_EQ(scalar, avx2) << "n=" << n << " s=" << s << " k=" << k;
    }
}

TEST(WaveKernels, Avx2MatchesScalarWithEquidistantSeeds) {
    if (!isa_available(KernelIsa::Avx2)) GTEST_SKIP() << "AVX2 not available";
    // Mirror-image seed pairs produce exact ties everywhere on the midlines.
    const int n = 37;
    const SeedSet seeds(n, std::vector<Point>{{30, 18}, {6, 18}, {18, 6}, {18, 30}, {18, 18}, {18, 18}});
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto in = oracle::random_claims(rng, n, 6, 0.2);
        for (const auto m : {DistanceMetric::Euclidean, DistanceMetric::Manhattan}) {
            for (int k : {1, 2, 5, 16}) {
                const auto offsets = neighbor_offsets(Neighborhood::Moore, k);
                EXPECT_EQ(apply(in, seeds, offsets, m, {KernelIsa::Scalar, 1}),
                          apply(in, seeds, offsets, m, {KernelIsa::Avx2, 1}));
            }
        }
    }
}

TEST(WaveKernels, RowBandsAreIndependentOfPartitioning) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 60);
        const int s = 1 + static_cast<int>(rng() % 30);
        const auto seeds = oracle::random_seeds(rng, n, s);
        const auto in = oracle::random_claims(rng, n, s, 0.5);
        const auto offsets = neighbor_offsets(Neighborhood::Moore, 1 + static_cast<int>(rng() % 8));
        const auto one = apply(in, seeds, offsets, DistanceMetric::Euclidean, {detect_isa(), 1});
        for (unsigned threads : {2u, 3u, 7u, 200u}) {
            EXPECT_EQ(one, apply(in, seeds, offsets, DistanceMetric::Euclidean, {detect_isa(), threads}));
        }
    }
}

TEST(WaveKernels, RejectsAliasedOrMissizedBuffers) {
    const SeedSet seeds(4, std::vector<Point>{{1, 1}});
    VoronoiGrid g(4);
    const auto offsets = neighbor_offsets(Neighborhood::Moore, 1);
    WaveArgs args;
    args.n = 4;
    args.in = g.claims();
    args.out = g.claims();
    args.seed_x = seeds.xs();
    args.seed_y = seeds.ys();
    args.offsets = offsets;
    args.row_end = 4;
    EXPECT_THROW(run_wave(args, {KernelIsa::Scalar, 1}), std::invalid_argument);

    VoronoiGrid small(3);
    args.out = small.claims();
    EXPECT_THROW(run_wave(args, {KernelIsa::Scalar, 1}), std::invalid_argument);
}

TEST(WaveKernels, ScalarOverrideFromEnvironment) {
    ::setenv("JUMPFLOOD_ISA", "scalar", 1);
    EXPECT_EQ(detect_isa(), KernelIsa::Scalar);
    ::unsetenv("JUMPFLOOD_ISA");
    EXPECT_EQ(detect_isa(), isa_available(KernelIsa::Avx2) ? KernelIsa::Avx2 : KernelIsa::Scalar);
}
