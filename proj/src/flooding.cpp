#include <jumpflood/flooding.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace jumpflood {

namespace {

void check_extra_rounds(int extra_rounds) {
    if (extra_rounds < 0 || extra_rounds > 2) {
        throw std::invalid_argument("extra_rounds must be 0, 1 or 2, got " + std::to_string(extra_rounds));
    }
}

void check_grid_matches(const VoronoiGrid& grid, const SeedSet& seeds) {
    if (grid.n() != seeds.n()) {
        throw std::invalid_argument("grid side " + std::to_string(grid.n()) + " does not match seed set side " +
                                    std::to_string(seeds.n()));
    }
}

void wave_into(const VoronoiGrid& in, VoronoiGrid& out, const SeedSet& seeds, int k, Neighborhood nb,
               DistanceMetric m, const ExecPolicy& policy) {
    const auto offsets = neighbor_offsets(nb, k);
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
}

}  // namespace

int jfa_first_step(int n) {
    if (n < 2) {
        throw std::invalid_argument("grid side must be >= 2 for a jump schedule, got " + std::to_string(n));
    }
    int exponent = 0;
    while ((1 << exponent) < n) ++exponent;  // ceil(log2 n)
    return 1 << (exponent - 1);
}

WaveSchedule jfa_schedule(int n, int extra_rounds) {
    check_extra_rounds(extra_rounds);
    WaveSchedule schedule;
    for (int k = jfa_first_step(n); k >= 1; k /= 2) {
        schedule.steps.push_back(k);
        schedule.phases.push_back(Neighborhood::Moore);
    }
    for (int r = 0; r < extra_rounds; ++r) {
        schedule.steps.push_back(1);
        schedule.phases.push_back(Neighborhood::Moore);
    }
    schedule.extra_rounds = extra_rounds;
    return schedule;
}

VoronoiGrid flood_wave(const VoronoiGrid& current, const SeedSet& seeds, int k, Neighborhood nb, DistanceMetric m,
                       const ExecPolicy& policy) {
    check_grid_matches(current, seeds);
    VoronoiGrid next(current.n());
    wave_into(current, next, seeds, k, nb, m, policy);
    return next;
}

void run_schedule(VoronoiGrid& grid, const SeedSet& seeds, const WaveSchedule& schedule, DistanceMetric m,
                  const ExecPolicy& policy) {
    check_grid_matches(grid, seeds);
    if (schedule.steps.size() != schedule.phases.size()) {
        throw std::invalid_argument("schedule steps and phases differ in length");
    }
    VoronoiGrid scratch(grid.n());
    for (std::size_t i = 0; i < schedule.steps.size(); ++i) {
        wave_into(grid, scratch, seeds, schedule.steps[i], schedule.phases[i], m, policy);
        std::swap(grid, scratch);
    }
}

StfResult run_stf(const SeedSet& seeds, DistanceMetric m, const ExecPolicy& policy) {
    VoronoiGrid grid = stamp_seeds(seeds);
    VoronoiGrid scratch(seeds.n());
    int waves = 0;
    int waves_to_complete = grid.is_complete() ? 0 : -1;

    for (;;) {
        wave_into(grid, scratch, seeds, 1, Neighborhood::Moore, m, policy);
        ++waves;
        const bool changed = scratch != grid;
        std::swap(grid, scratch);
        if (waves_to_complete < 0 && grid.is_complete()) {
            waves_to_complete = waves;
        }
        if (!changed && waves_to_complete >= 0) break;
    }
    return {std::move(grid), waves, waves_to_complete};
}

FloodResult run_jfa(const SeedSet& seeds, DistanceMetric m, int extra_rounds, const ExecPolicy& policy) {
    const WaveSchedule schedule = jfa_schedule(seeds.n(), extra_rounds);
    VoronoiGrid grid = stamp_seeds(seeds);
    run_schedule(grid, seeds, schedule, m, policy);
    return {std::move(grid), static_cast<int>(schedule.wave_count())};
}

VoronoiGrid run_exact(const SeedSet& seeds, DistanceMetric m) {
    const int n = seeds.n();
    VoronoiGrid grid(n);
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            SeedId best = kEmpty;
            std::int32_t best_cost = kInfiniteCost;
            for (std::size_t i = 0; i < seeds.size(); ++i) {
                const std::int32_t cost = metric_cost(m, seeds.xs()[i] - x, seeds.ys()[i] - y);
                // Ascending ids: strict < keeps the lowest id on ties.
                if (cost < best_cost) {
                    best_cost = cost;
                    best = static_cast<SeedId>(i);
                }
            }
            grid.set(x, y, best);
        }
    }
    return grid;
}

}  // namespace jumpflood
