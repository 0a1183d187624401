#pragma once
// Dynamic jump flooding for moving seeds.
//
// Each simulation step starts from the previous step's diagram instead of an
// empty grid, and the first jump is sized from the expected region length
// and the per-step motion bound rather than from the grid side:
//
//   L_avg   = sqrt(n^2 / s)
//   delta_1 = 2^ceil(log2(max(2 L_avg, d_max)))     (capped at the static k1)
//   delta_i = delta_1 / 2^(i-1), down to 1
//
// The first vn_phase_waves waves use the 4-offset Von Neumann neighborhood,
// the rest Moore.

#include <jumpflood/core.hpp>
#include <jumpflood/flooding.hpp>

namespace jumpflood {

struct DjfaParams {
    int d_max = 1;
    DistanceMetric metric = DistanceMetric::Euclidean;
    int vn_phase_waves = 2;
    int extra_rounds = 1;
};

/// sqrt(n^2 / s). Throws std::invalid_argument for n < 2 or s < 1.
double avg_region_length(int n, long long s);

/// Uncapped exponent ceil(log2(max(2 L_avg, d_max))), never below 0.
int djfa_exponent(int n, long long s, int d_max);

/// Throws std::invalid_argument when params are out of range.
WaveSchedule djfa_schedule(int n, long long s, const DjfaParams& params);

/// One dynamic step: re-stamps the current seed pixels onto prev and runs
/// the dynamic schedule. Distances always use the current positions.
/// Throws std::invalid_argument if prev is incomplete, sized for another
/// grid, or claims ids that do not exist in seeds.
FloodResult run_djfa_step(const VoronoiGrid& prev, const SeedSet& seeds, const DjfaParams& params,
                          const ExecPolicy& policy = {});

}  // namespace jumpflood
