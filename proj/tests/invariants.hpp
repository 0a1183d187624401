#pragma once
// Randomized invariant checks shared by the property tests and the
// acceptance runner. Each check draws one case from rng and returns an
// error description, or nothing when the invariant holds.

#include <jumpflood/djfa.hpp>
#include <jumpflood/flooding.hpp>
#include <jumpflood/metrics.hpp>

#include "oracles.hpp"

#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>

namespace jumpflood::oracle {

using CheckResult = std::optional<std::string>;

struct StaticCase {
    SeedSet seeds;
    DistanceMetric metric;
    WaveSchedule schedule;
};

inline StaticCase random_static_case(std::mt19937_64& rng) {
    const int n = 2 + static_cast<int>(rng() % 31);
    const int s = 1 + static_cast<int>(rng() % 12);
    const auto metric = rng() % 2 ? DistanceMetric::Euclidean : DistanceMetric::Manhattan;
    WaveSchedule schedule;
    if (rng() % 2) {
        schedule = jfa_schedule(n, static_cast<int>(rng() % 3));
    } else {
        DjfaParams p{1 + static_cast<int>(rng() % 8), metric, static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
        schedule = djfa_schedule(n, s, p);
    }
    return {random_seeds(rng, n, s), metric, std::move(schedule)};
}

/// Claimed pixels stay claimed and their distance to the claimed seed never
/// grows, wave after wave.
inline CheckResult check_monotone_waves(std::mt19937_64& rng) {
    const auto c = random_static_case(rng);
    VoronoiGrid grid = stamp_seeds(c.seeds);
    for (std::size_t w = 0; w < c.schedule.steps.size(); ++w) {
        const auto next = flood_wave(grid, c.seeds, c.schedule.steps[w], c.schedule.phases[w], c.metric);
        const int n = grid.n();
        for (int y = 0; y < n; ++y) {
            for (int x = 0; x < n; ++x) {
                const SeedId before = grid.at(x, y);
                const SeedId after = next.at(x, y);
                if (before == kEmpty) continue;
                if (after == kEmpty) {
                    std::ostringstream msg;
                    msg << "pixel (" << x << "," << y << ") lost its claim in wave " << w;
                    return msg.str();
                }
                const double d0 = distance(c.metric, {x, y}, c.seeds.position(before));
                const double d1 = distance(c.metric, {x, y}, c.seeds.position(after));
                if (d1 > d0) {
                    std::ostringstream msg;
                    msg << "pixel (" << x << "," << y << ") distance grew " << d0 << " -> " << d1 << " in wave " << w;
                    return msg.str();
                }
            }
        }
        grid = next;
    }
    return std::nullopt;
}

/// Region areas of complete diagrams sum to n^2.
inline CheckResult check_partition(std::mt19937_64& rng) {
    const auto c = random_static_case(rng);
    const auto jfa = run_jfa(c.seeds, c.metric, 1).grid;
    const auto exact = run_exact(c.seeds, c.metric);
    const auto expected = static_cast<std::int64_t>(c.seeds.n()) * c.seeds.n();
    for (const auto* g : {&jfa, &exact}) {
        if (!g->is_complete()) return "diagram incomplete";
        const auto areas = region_areas(*g, c.seeds.size());
        const auto total = std::accumulate(areas.begin(), areas.end(), std::int64_t{0});
        if (total != expected) return "areas sum to " + std::to_string(total);
    }
    return std::nullopt;
}

inline CheckResult check_similarity_laws(std::mt19937_64& rng) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const int s = 1 + static_cast<int>(rng() % 6);
    const auto a = random_claims(rng, n, s, 0.1);
    const auto b = random_claims(rng, n, s, 0.1);
    if (similarity(a, a) != 100.0 || similarity(b, b) != 100.0) return "similarity(a, a) != 100";
    const double ab = similarity(a, b);
    if (ab != similarity(b, a)) return "similarity not symmetric";
    if (ab < 0.0 || ab > 100.0) return "similarity outside [0, 100]";
    return std::nullopt;
}

/// The kernel's gather pass equals the sequential scatter formulation on
/// 8x8 grids with arbitrary (possibly EMPTY) claims.
inline CheckResult check_gather_scatter(std::mt19937_64& rng) {
    const int n = 8;
    const int s = 1 + static_cast<int>(rng() % 10);
    const auto seeds = random_seeds(rng, n, s);
    const auto state = random_claims(rng, n, s, std::uniform_real_distribution<double>(0.0, 0.95)(rng));
    const int k = 1 + static_cast<int>(rng() % 8);
    const auto nb = rng() % 2 ? Neighborhood::Moore : Neighborhood::VonNeumann;
    const auto m = rng() % 2 ? DistanceMetric::Euclidean : DistanceMetric::Manhattan;
    if (flood_wave(state, seeds, k, nb, m) != scatter_wave(state, seeds, k, nb, m)) {
        return "gather and scatter disagree for k=" + std::to_string(k);
    }
    return std::nullopt;
}

}  // namespace jumpflood::oracle
