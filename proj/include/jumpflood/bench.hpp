#pragma once
// Simulation and sweep harness: moves seeds for a number of steps, builds the
// diagram with each requested algorithm on the same snapshot, and records
// wave counts, timings and similarity against the same-step JFA grid.

#include <jumpflood/core.hpp>
#include <jumpflood/kernels.hpp>
#include <jumpflood/metrics.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jumpflood {

enum class Algorithm : std::uint8_t { Jfa, DjfaEuclidean, DjfaManhattan, Stf, Exact };

std::string_view to_string(Algorithm a);
/// Throws std::invalid_argument for unknown names.
Algorithm parse_algorithm(std::string_view name);
/// Comma separated list, duplicates removed, sorted by name.
std::vector<Algorithm> parse_algorithms(std::string_view list);

struct SimConfig {
    int n = 512;
    long long s = 1024;
    int steps = 100;
    int d_max = 4;
    std::uint64_t rng_seed = 1;
    std::vector<Algorithm> algorithms{Algorithm::DjfaEuclidean, Algorithm::DjfaManhattan, Algorithm::Jfa};
    int extra_rounds = 1;
    int vn_phase_waves = 2;
    std::filesystem::path csv_path;
    std::filesystem::path frames_dir;
    /// Write PPM frames on steps that are multiples of this; 0 disables.
    int frame_every = 0;
    ExecPolicy exec;
};

/// Throws std::invalid_argument describing the first bad field.
void validate(const SimConfig& cfg);

struct SimulationResult {
    /// steps x algorithms records, ordered by (step, algorithm name).
    std::vector<MetricsRecord> records;
    /// Step-0 JFA runs that seed each dynamic variant's first previous diagram.
    std::vector<MetricsRecord> bootstrap;
};

/// Runs the full experiment loop. When cfg.csv_path is set the CSV (bootstrap
/// rows first) is written on success, and also with whatever was recorded
/// before an exception is rethrown.
SimulationResult run_simulation(const SimConfig& cfg);

struct SweepRow {
    int n = 0;
    long long s = 0;
    int d_max = 0;
    int steps = 0;
    std::string algorithm;
    int waves_per_step = 0;
    double cumulative_seconds = 0.0;
    double mean_similarity_pct = 0.0;
    std::optional<double> speedup_vs_jfa;
    std::string error;
};

/// One simulation per (n, s) pair; a failing cell yields a single row with
/// the error message and the sweep continues.
std::vector<SweepRow> sweep(const SimConfig& base, const std::vector<int>& n_values,
                            const std::vector<long long>& s_values);

inline constexpr std::string_view kCsvHeader = "step,algorithm,n,s,d_max,wave_count,elapsed_seconds,similarity_pct";
inline constexpr std::string_view kSweepCsvHeader =
    "n,s,d_max,steps,algorithm,waves_per_step,cumulative_seconds,mean_similarity_pct,speedup_vs_jfa,error";

/// Rows in (step, algorithm) order regardless of input order.
void write_csv(std::ostream& out, std::vector<MetricsRecord> records);
/// Throws std::runtime_error naming the path on I/O failure.
void export_csv(const std::vector<MetricsRecord>& records, const std::filesystem::path& path);
/// Throws std::runtime_error on a malformed header or row.
std::vector<MetricsRecord> parse_csv(std::istream& in);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void export_sweep_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Hash palette; never black.
Rgb region_color(SeedId id);

/// Binary P6 image: region colors with seed pixels in black.
/// Throws std::invalid_argument for an incomplete grid.
std::string encode_ppm(const VoronoiGrid& grid, const SeedSet& seeds);
/// Throws std::runtime_error naming the path on I/O failure.
void export_image(const VoronoiGrid& grid, const SeedSet& seeds, const std::filesystem::path& path);

}  // namespace jumpflood
