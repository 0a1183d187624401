#include <jumpflood/dynamics.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace jumpflood {

namespace {

constexpr std::uint64_t kPlacementStream = 1;
constexpr std::uint64_t kMotionStream = 2;

}  // namespace

std::uint64_t CounterRng::below(std::uint64_t bound) noexcept {
    unsigned __int128 product = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            product = static_cast<unsigned __int128>(next()) * bound;
            low = static_cast<std::uint64_t>(product);
        }
    }
    return static_cast<std::uint64_t>(product >> 64);
}

SeedSet init_uniform_seeds(int n, long long s, std::uint64_t rng_seed) {
    const long long cells = static_cast<long long>(n) * n;
    if (n < 1 || s < 1 || s > cells) {
        throw std::invalid_argument("seed count " + std::to_string(s) + " must lie in [1, n^2] for n=" +
                                    std::to_string(n));
    }
    std::vector<Point> positions(static_cast<std::size_t>(s));
    for (std::size_t i = 0; i < positions.size(); ++i) {
        CounterRng rng(rng_seed, kPlacementStream, 0, i);
        const auto x = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(n)));
        const auto y = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(n)));
        positions[i] = {x, y};
    }
    return SeedSet(n, positions);
}

SeedSet move_seeds(const SeedSet& seeds, const MotionConfig& cfg, std::uint64_t step_index) {
    if (cfg.d_max < 0) {
        throw std::invalid_argument("d_max must be >= 0, got " + std::to_string(cfg.d_max));
    }
    if (cfg.d_max == 0) return seeds;

    const int hi = seeds.n() - 1;
    const auto span = static_cast<std::uint64_t>(2 * cfg.d_max + 1);
    std::vector<Point> moved(seeds.size());
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        CounterRng rng(cfg.rng_seed, kMotionStream, step_index, i);
        const int dx = static_cast<int>(rng.below(span)) - cfg.d_max;
        const int dy = static_cast<int>(rng.below(span)) - cfg.d_max;
        moved[i] = {std::clamp(seeds.xs()[i] + dx, 0, hi), std::clamp(seeds.ys()[i] + dy, 0, hi)};
    }
    return SeedSet(seeds.n(), moved);
}

}  // namespace jumpflood
