#include <jumpflood/core.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace jumpflood {

namespace {

void check_side(int n) {
    if (n < 1 || n > kMaxGridSide) {
        throw std::invalid_argument("grid side " + std::to_string(n) + " outside [1, " +
                                    std::to_string(kMaxGridSide) + "]");
    }
}

}  // namespace

std::string_view to_string(DistanceMetric m) {
    return m == DistanceMetric::Euclidean ? "euclidean" : "manhattan";
}

std::string_view to_string(Neighborhood nb) {
    return nb == Neighborhood::Moore ? "moore" : "von-neumann";
}

std::vector<Offset> neighbor_offsets(Neighborhood nb, int k) {
    if (k < 1) {
        throw std::invalid_argument("jump size must be >= 1, got " + std::to_string(k));
    }
    if (nb == Neighborhood::VonNeumann) {
        return {{k, 0}, {0, k}, {-k, 0}, {0, -k}};
    }
    return {{k, 0}, {k, k}, {0, k}, {-k, k}, {-k, 0}, {-k, -k}, {0, -k}, {k, -k}};
}

double distance(DistanceMetric m, Point a, Point b) {
    const double dx = static_cast<double>(a.x) - b.x;
    const double dy = static_cast<double>(a.y) - b.y;
    if (m == DistanceMetric::Euclidean) {
        return std::sqrt(dx * dx + dy * dy);
    }
    return std::abs(dx) + std::abs(dy);
}

SeedSet::SeedSet(int n, std::span<const Point> positions) : n_(n) {
    check_side(n);
    if (positions.empty()) {
        throw std::invalid_argument("seed set must contain at least one seed");
    }
    xs_.reserve(positions.size());
    ys_.reserve(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const Point p = positions[i];
        if (p.x < 0 || p.x >= n || p.y < 0 || p.y >= n) {
            throw std::invalid_argument("seed " + std::to_string(i) + " at (" + std::to_string(p.x) + "," +
                                        std::to_string(p.y) + ") outside " + std::to_string(n) + "x" +
                                        std::to_string(n) + " grid");
        }
        xs_.push_back(p.x);
        ys_.push_back(p.y);
    }
}

SeedSet SeedSet::from_seeds(int n, std::span<const Seed> seeds) {
    std::vector<Point> positions;
    positions.reserve(seeds.size());
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        if (seeds[i].id != static_cast<SeedId>(i)) {
            throw std::invalid_argument("seed ids must be contiguous from 0; position " + std::to_string(i) +
                                        " has id " + std::to_string(seeds[i].id));
        }
        positions.push_back(seeds[i].pos);
    }
    return SeedSet(n, positions);
}

std::vector<Point> SeedSet::positions() const {
    std::vector<Point> out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        out[i] = {xs_[i], ys_[i]};
    }
    return out;
}

std::size_t SeedSet::distinct_pixels() const {
    std::unordered_set<std::int64_t> cells;
    cells.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        cells.insert(static_cast<std::int64_t>(ys_[i]) * n_ + xs_[i]);
    }
    return cells.size();
}

VoronoiGrid::VoronoiGrid(int n) : n_(n) {
    check_side(n);
    claims_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kEmpty);
}

VoronoiGrid::VoronoiGrid(int n, std::vector<SeedId> claims) : n_(n), claims_(std::move(claims)) {
    check_side(n);
    if (claims_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        throw std::invalid_argument("claim buffer has " + std::to_string(claims_.size()) + " entries, expected " +
                                    std::to_string(n) + "^2");
    }
}

bool VoronoiGrid::is_complete() const noexcept {
    return std::find(claims_.begin(), claims_.end(), kEmpty) == claims_.end();
}

std::size_t VoronoiGrid::claimed_count() const noexcept {
    return claims_.size() - static_cast<std::size_t>(std::count(claims_.begin(), claims_.end(), kEmpty));
}

void stamp_into(VoronoiGrid& grid, const SeedSet& seeds) {
    if (grid.n() != seeds.n()) {
        throw std::invalid_argument("grid side " + std::to_string(grid.n()) + " does not match seed set side " +
                                    std::to_string(seeds.n()));
    }
    // Descending id order so the lowest id is written last.
    for (std::size_t i = seeds.size(); i-- > 0;) {
        grid.set(seeds.xs()[i], seeds.ys()[i], static_cast<SeedId>(i));
    }
}

VoronoiGrid stamp_seeds(const SeedSet& seeds) {
    VoronoiGrid grid(seeds.n());
    stamp_into(grid, seeds);
    return grid;
}

}  // namespace jumpflood
