#pragma once
// Evaluation: pixel similarity, speedup, region-length statistics and
// per-algorithm time totals.

#include <jumpflood/core.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace jumpflood {

struct MetricsRecord {
    int step = 0;
    std::string algorithm;
    int n = 0;
    long long s = 0;
    int d_max = 0;
    int wave_count = 0;
    /// Wall clock of the diagram computation only.
    double elapsed_seconds = 0.0;
    /// Percent of pixels matching the same-step JFA grid.
    double similarity_pct = 100.0;

    friend bool operator==(const MetricsRecord&, const MetricsRecord&) = default;
};

/// 100 * matching pixels / total pixels. EMPTY matches only EMPTY.
/// Throws std::invalid_argument on size mismatch.
double similarity(const VoronoiGrid& a, const VoronoiGrid& b);

/// t_base / t_new. Throws std::invalid_argument unless both are > 0.
double speedup(double t_base, double t_new);

/// Pixels owned by each seed id, indexed by id (size seed_count).
std::vector<std::int64_t> region_areas(const VoronoiGrid& grid, std::size_t seed_count);

/// Region length is sqrt(area in pixels), one entry per seed that owns at
/// least one pixel, in id order.
std::vector<double> region_lengths(const VoronoiGrid& grid, std::size_t seed_count);

struct Histogram {
    double bin_width = 1.0;
    /// Bin b covers [b * bin_width, (b + 1) * bin_width).
    std::map<std::int64_t, std::int64_t> counts;

    std::int64_t total() const;
    /// True when every bin holding the maximum count lies within
    /// `tolerance_bins` of the first such bin.
    bool single_peak(int tolerance_bins = 1) const;
};

Histogram make_histogram(std::span<const double> values, double bin_width);

/// Throws std::invalid_argument for bin_width <= 0 or an incomplete grid.
Histogram region_length_histogram(const VoronoiGrid& grid, std::size_t seed_count, double bin_width = 1.0);

/// Sum of elapsed_seconds per algorithm tag.
std::map<std::string, double> cumulative_times(std::span<const MetricsRecord> records);

}  // namespace jumpflood
