#pragma once
// Uniform random seed placement and motion.
//
// All randomness is counter based: every draw is a pure function of
// (rng_seed, stream, step, seed id, draw index), so trajectories do not
// depend on iteration order or platform.

#include <jumpflood/core.hpp>

#include <cstdint>

namespace jumpflood {

struct MotionConfig {
    int d_max = 1;
    std::uint64_t rng_seed = 0;
};

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Stream of 64-bit words for one key.
class CounterRng {
public:
    constexpr CounterRng(std::uint64_t rng_seed, std::uint64_t stream, std::uint64_t step, std::uint64_t item) noexcept
        : key_(mix64(mix64(mix64(rng_seed ^ mix64(stream)) ^ step) ^ item)) {}

    constexpr std::uint64_t next() noexcept { return mix64(key_ + 0x632be59bd9b4e019ULL * ++counter_); }

    /// Unbiased integer in [0, bound), bound >= 1 (Lemire's multiply-and-reject).
    std::uint64_t below(std::uint64_t bound) noexcept;

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// s seeds uniform over the n x n grid. Throws std::invalid_argument unless
/// 1 <= s <= n^2.
SeedSet init_uniform_seeds(int n, long long s, std::uint64_t rng_seed);

/// Per-axis displacement uniform in [-d_max, d_max], clamped to the grid.
/// Throws std::invalid_argument for d_max < 0.
SeedSet move_seeds(const SeedSet& seeds, const MotionConfig& cfg, std::uint64_t step_index);

}  // namespace jumpflood
