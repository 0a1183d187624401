#include <jumpflood/djfa.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace jumpflood {

namespace {

void check_params(const DjfaParams& p) {
    if (p.d_max < 1) {
        throw std::invalid_argument("d_max must be >= 1, got " + std::to_string(p.d_max));
    }
    if (p.vn_phase_waves < 0 || p.vn_phase_waves > 2) {
        throw std::invalid_argument("vn_phase_waves must be 0, 1 or 2, got " + std::to_string(p.vn_phase_waves));
    }
    if (p.extra_rounds < 0 || p.extra_rounds > 2) {
        throw std::invalid_argument("extra_rounds must be 0, 1 or 2, got " + std::to_string(p.extra_rounds));
    }
}

int log2_exact(int power_of_two) {
    int e = 0;
    while ((1 << e) < power_of_two) ++e;
    return e;
}

}  // namespace

double avg_region_length(int n, long long s) {
    if (n < 2) {
        throw std::invalid_argument("grid side must be >= 2, got " + std::to_string(n));
    }
    if (s < 1) {
        throw std::invalid_argument("seed count must be >= 1, got " + std::to_string(s));
    }
    const double side = n;
    return std::sqrt(side * side / static_cast<double>(s));
}

int djfa_exponent(int n, long long s, int d_max) {
    const double reach = std::max(2.0 * avg_region_length(n, s), static_cast<double>(d_max));
    // Smallest e with 2^e >= reach; exact for power-of-two reach, unlike log2().
    int e = 0;
    while (std::ldexp(1.0, e) < reach) ++e;
    return e;
}

WaveSchedule djfa_schedule(int n, long long s, const DjfaParams& params) {
    check_params(params);
    const int cap = log2_exact(jfa_first_step(n));
    const int first = 1 << std::min(djfa_exponent(n, s, params.d_max), cap);

    WaveSchedule schedule;
    for (int k = first; k >= 1; k /= 2) {
        schedule.steps.push_back(k);
    }
    const auto vn = std::min(static_cast<std::size_t>(params.vn_phase_waves), schedule.steps.size());
    schedule.phases.assign(schedule.steps.size(), Neighborhood::Moore);
    std::fill_n(schedule.phases.begin(), vn, Neighborhood::VonNeumann);

    for (int r = 0; r < params.extra_rounds; ++r) {
        schedule.steps.push_back(1);
        schedule.phases.push_back(Neighborhood::Moore);
    }
    schedule.extra_rounds = params.extra_rounds;
    return schedule;
}

FloodResult run_djfa_step(const VoronoiGrid& prev, const SeedSet& seeds, const DjfaParams& params,
                          const ExecPolicy& policy) {
    if (prev.n() != seeds.n()) {
        throw std::invalid_argument("previous diagram is " + std::to_string(prev.n()) + "x" +
                                    std::to_string(prev.n()) + " but seeds live on a " + std::to_string(seeds.n()) +
                                    " grid");
    }
    const auto live = static_cast<SeedId>(seeds.size());
    for (const SeedId c : prev.claims()) {
        if (c == kEmpty) {
            throw std::invalid_argument("previous diagram is incomplete");
        }
        if (c < 0 || c >= live) {
            throw std::invalid_argument("previous diagram claims seed " + std::to_string(c) + " but only " +
                                        std::to_string(live) + " seeds exist");
        }
    }

    const WaveSchedule schedule = djfa_schedule(seeds.n(), static_cast<long long>(seeds.size()), params);
    VoronoiGrid grid = prev;
    stamp_into(grid, seeds);
    run_schedule(grid, seeds, schedule, params.metric, policy);
    return {std::move(grid), static_cast<int>(schedule.wave_count())};
}

}  // namespace jumpflood
