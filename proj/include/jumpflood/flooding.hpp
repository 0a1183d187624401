#pragma once
// Static Voronoi construction: standard flooding, jump flooding and the
// brute-force nearest-seed oracle.

#include <jumpflood/core.hpp>
#include <jumpflood/kernels.hpp>

#include <cstddef>
#include <vector>

namespace jumpflood {

/// Ordered jump sizes with a neighborhood per wave. extra_rounds trailing
/// k=1 Moore waves are listed explicitly in steps/phases as well.
struct WaveSchedule {
    std::vector<int> steps;
    std::vector<Neighborhood> phases;
    int extra_rounds = 0;

    std::size_t wave_count() const noexcept { return steps.size(); }
    /// Waves before the extra rounds.
    std::size_t halving_waves() const noexcept { return steps.size() - static_cast<std::size_t>(extra_rounds); }

    friend bool operator==(const WaveSchedule&, const WaveSchedule&) = default;
};

/// First jump of the static schedule, 2^(ceil(log2 n) - 1). Throws for n < 2.
int jfa_first_step(int n);

/// [k1, k1/2, ..., 1] all Moore, followed by extra_rounds k=1 Moore waves.
/// Throws std::invalid_argument for n < 2 or extra_rounds outside [0, 2].
WaveSchedule jfa_schedule(int n, int extra_rounds = 1);

/// One double-buffered gather pass; current is left untouched.
VoronoiGrid flood_wave(const VoronoiGrid& current, const SeedSet& seeds, int k, Neighborhood nb, DistanceMetric m,
                       const ExecPolicy& policy = {});

/// Applies every wave of schedule to grid in place (ping-pong buffers).
void run_schedule(VoronoiGrid& grid, const SeedSet& seeds, const WaveSchedule& schedule, DistanceMetric m,
                  const ExecPolicy& policy = {});

struct FloodResult {
    VoronoiGrid grid;
    int waves = 0;
};

struct StfResult {
    VoronoiGrid grid;
    /// Passes executed, including the final pass that changed nothing.
    int waves = 0;
    /// Passes after which no pixel was EMPTY.
    int waves_to_complete = 0;
};

/// k=1 Moore waves from the stamped seeds until the grid is complete and a
/// further pass leaves it unchanged.
StfResult run_stf(const SeedSet& seeds, DistanceMetric m, const ExecPolicy& policy = {});

FloodResult run_jfa(const SeedSet& seeds, DistanceMetric m, int extra_rounds = 1, const ExecPolicy& policy = {});

/// Ground truth: every pixel scans all seeds. O(n^2 s).
VoronoiGrid run_exact(const SeedSet& seeds, DistanceMetric m);

}  // namespace jumpflood
