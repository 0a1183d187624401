#pragma once
// Foundational raster Voronoi types: seeds, claim grids, neighborhoods and
// distance metrics shared by every flooding algorithm.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace jumpflood {

using SeedId = std::int32_t;

/// Claim value of a pixel that no flood has reached yet.
inline constexpr SeedId kEmpty = -1;

/// Largest supported grid side. Keeps squared Euclidean costs inside int32.
inline constexpr int kMaxGridSide = 16384;

struct Point {
    std::int32_t x = 0;
    std::int32_t y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

struct Seed {
    SeedId id = 0;
    Point pos;

    friend bool operator==(const Seed&, const Seed&) = default;
};

enum class DistanceMetric : std::uint8_t { Euclidean, Manhattan };
enum class Neighborhood : std::uint8_t { Moore, VonNeumann };

std::string_view to_string(DistanceMetric m);
std::string_view to_string(Neighborhood nb);

struct Offset {
    std::int32_t dx = 0;
    std::int32_t dy = 0;

    friend bool operator==(const Offset&, const Offset&) = default;
};

/// Jump offsets at range k. Moore order follows the classic JFA table:
/// (+k,0), (+k,+k), (0,+k), (-k,+k), (-k,0), (-k,-k), (0,-k), (+k,-k).
/// VonNeumann keeps the four axis-aligned entries in the same rotation.
/// Throws std::invalid_argument for k < 1.
std::vector<Offset> neighbor_offsets(Neighborhood nb, int k);

/// True metric value; Euclidean takes the square root.
double distance(DistanceMetric m, Point a, Point b);

/// Comparison cost used by every kernel: squared Euclidean or Manhattan.
/// Monotone in distance() for a fixed metric.
constexpr std::int32_t metric_cost(DistanceMetric m, std::int32_t dx, std::int32_t dy) {
    if (m == DistanceMetric::Euclidean) {
        return dx * dx + dy * dy;
    }
    return (dx < 0 ? -dx : dx) + (dy < 0 ? -dy : dy);
}

/// Cost of an EMPTY claim; any real seed beats it.
inline constexpr std::int32_t kInfiniteCost = std::numeric_limits<std::int32_t>::max();

/// Immutable set of seeds on an n x n grid. Ids are the dense indices
/// 0..size()-1. Positions are also kept as separate x/y arrays for the
/// wave kernels.
class SeedSet {
public:
    /// Throws std::invalid_argument when positions is empty, n is outside
    /// [1, kMaxGridSide], or any position lies outside the grid.
    SeedSet(int n, std::span<const Point> positions);

    /// Validates that ids are exactly 0..s-1 in order.
    static SeedSet from_seeds(int n, std::span<const Seed> seeds);

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return xs_.size(); }

    Point position(SeedId id) const { return {xs_.at(static_cast<std::size_t>(id)), ys_[static_cast<std::size_t>(id)]}; }
    Seed operator[](std::size_t i) const { return {static_cast<SeedId>(i), {xs_[i], ys_[i]}}; }

    std::span<const std::int32_t> xs() const noexcept { return xs_; }
    std::span<const std::int32_t> ys() const noexcept { return ys_; }

    std::vector<Point> positions() const;

    /// Number of distinct pixels occupied by at least one seed.
    std::size_t distinct_pixels() const;

    friend bool operator==(const SeedSet&, const SeedSet&) = default;

private:
    int n_ = 0;
    std::vector<std::int32_t> xs_;
    std::vector<std::int32_t> ys_;
};

/// n x n raster of seed claims, row-major (index = y * n + x).
class VoronoiGrid {
public:
    /// All-EMPTY grid. Throws std::invalid_argument for n outside [1, kMaxGridSide].
    explicit VoronoiGrid(int n);
    VoronoiGrid(int n, std::vector<SeedId> claims);

    int n() const noexcept { return n_; }
    std::size_t pixel_count() const noexcept { return claims_.size(); }

    SeedId at(int x, int y) const { return claims_[index(x, y)]; }
    void set(int x, int y, SeedId id) { claims_[index(x, y)] = id; }

    std::span<const SeedId> claims() const noexcept { return claims_; }
    std::span<SeedId> claims() noexcept { return claims_; }

    /// No EMPTY pixels.
    bool is_complete() const noexcept;
    std::size_t claimed_count() const noexcept;

    friend bool operator==(const VoronoiGrid&, const VoronoiGrid&) = default;

private:
    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(x);
    }

    int n_ = 0;
    std::vector<SeedId> claims_;
};

/// Writes each seed's id onto its own pixel of grid; on shared pixels the
/// lowest id wins.
void stamp_into(VoronoiGrid& grid, const SeedSet& seeds);

/// Fresh grid with only seed pixels claimed.
VoronoiGrid stamp_seeds(const SeedSet& seeds);

/// Lower cost wins, lower id breaks ties.
constexpr bool claim_beats(std::int32_t cost, SeedId id, std::int32_t best_cost, SeedId best_id) {
    return cost < best_cost || (cost == best_cost && id < best_id);
}

}  // namespace jumpflood
