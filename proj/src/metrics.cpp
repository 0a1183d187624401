#include <jumpflood/metrics.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace jumpflood {

double similarity(const VoronoiGrid& a, const VoronoiGrid& b) {
    if (a.n() != b.n()) {
        throw std::invalid_argument("cannot compare " + std::to_string(a.n()) + "x" + std::to_string(a.n()) +
                                    " grid with " + std::to_string(b.n()) + "x" + std::to_string(b.n()));
    }
    const auto ca = a.claims();
    const auto cb = b.claims();
    std::size_t matching = 0;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        matching += ca[i] == cb[i] ? 1 : 0;
    }
    return 100.0 * static_cast<double>(matching) / static_cast<double>(ca.size());
}

double speedup(double t_base, double t_new) {
    if (!(t_base > 0.0) || !(t_new > 0.0)) {
        throw std::invalid_argument("speedup needs positive times");
    }
    return t_base / t_new;
}

std::vector<std::int64_t> region_areas(const VoronoiGrid& grid, std::size_t seed_count) {
    std::vector<std::int64_t> areas(seed_count, 0);
    for (const SeedId c : grid.claims()) {
        if (c == kEmpty) continue;
        if (static_cast<std::size_t>(c) >= seed_count) {
            throw std::invalid_argument("grid claims seed " + std::to_string(c) + " beyond seed count " +
                                        std::to_string(seed_count));
        }
        ++areas[static_cast<std::size_t>(c)];
    }
    return areas;
}

std::vector<double> region_lengths(const VoronoiGrid& grid, std::size_t seed_count) {
    std::vector<double> lengths;
    for (const std::int64_t area : region_areas(grid, seed_count)) {
        if (area > 0) lengths.push_back(std::sqrt(static_cast<double>(area)));
    }
    return lengths;
}

std::int64_t Histogram::total() const {
    std::int64_t sum = 0;
    for (const auto& [bin, count] : counts) sum += count;
    return sum;
}

bool Histogram::single_peak(int tolerance_bins) const {
    if (counts.empty()) return false;
    std::int64_t peak = 0;
    for (const auto& [bin, count] : counts) peak = std::max(peak, count);
    std::int64_t first = 0;
    std::int64_t last = 0;
    bool seen = false;
    for (const auto& [bin, count] : counts) {
        if (count != peak) continue;
        if (!seen) first = bin;
        last = bin;
        seen = true;
    }
    return last - first <= tolerance_bins;
}

Histogram make_histogram(std::span<const double> values, double bin_width) {
    if (!(bin_width > 0.0)) {
        throw std::invalid_argument("histogram bin width must be positive");
    }
    Histogram h;
    h.bin_width = bin_width;
    for (const double v : values) {
        ++h.counts[static_cast<std::int64_t>(std::floor(v / bin_width))];
    }
    return h;
}

Histogram region_length_histogram(const VoronoiGrid& grid, std::size_t seed_count, double bin_width) {
    if (!grid.is_complete()) {
        throw std::invalid_argument("region statistics need a complete grid");
    }
    const auto lengths = region_lengths(grid, seed_count);
    return make_histogram(lengths, bin_width);
}

std::map<std::string, double> cumulative_times(std::span<const MetricsRecord> records) {
    std::map<std::string, double> totals;
    for (const auto& r : records) totals[r.algorithm] += r.elapsed_seconds;
    return totals;
}

}  // namespace jumpflood
