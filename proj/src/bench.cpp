#include <jumpflood/bench.hpp>

#include <jumpflood/djfa.hpp>
#include <jumpflood/dynamics.hpp>
#include <jumpflood/flooding.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace jumpflood {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 5> kAlgorithmNames{{
    {Algorithm::Jfa, "jfa"},
    {Algorithm::DjfaEuclidean, "djfa-euclidean"},
    {Algorithm::DjfaManhattan, "djfa-manhattan"},
    {Algorithm::Stf, "stf"},
    {Algorithm::Exact, "exact"},
}};

bool is_dynamic(Algorithm a) { return a == Algorithm::DjfaEuclidean || a == Algorithm::DjfaManhattan; }

DistanceMetric metric_of(Algorithm a) {
    return a == Algorithm::DjfaManhattan ? DistanceMetric::Manhattan : DistanceMetric::Euclidean;
}

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return {buf.data(), end};
}

template <typename T>
T parse_number(std::string_view field, std::string_view what) {
    T value{};
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || end != field.data() + field.size()) {
        throw std::runtime_error("bad " + std::string(what) + " field '" + std::string(field) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::filesystem::path frame_path(const std::filesystem::path& dir, Algorithm a, int step) {
    std::array<char, 16> digits{};
    std::snprintf(digits.data(), digits.size(), "%05d", step);
    return dir / (std::string(to_string(a)) + "_step" + digits.data() + ".ppm");
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

void sort_records(std::vector<MetricsRecord>& records) {
    std::stable_sort(records.begin(), records.end(), [](const MetricsRecord& a, const MetricsRecord& b) {
        if (a.step != b.step) return a.step < b.step;
        return a.algorithm < b.algorithm;
    });
}

}  // namespace

std::string_view to_string(Algorithm a) {
    for (const auto& [alg, name] : kAlgorithmNames) {
        if (alg == a) return name;
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
    for (const auto& [alg, known] : kAlgorithmNames) {
        if (known == name) return alg;
    }
    throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                                "' (expected jfa, djfa-euclidean, djfa-manhattan, stf or exact)");
}

std::vector<Algorithm> parse_algorithms(std::string_view list) {
    std::vector<Algorithm> out;
    for (const auto field : split(list, ',')) {
        if (field.empty()) continue;
        const Algorithm a = parse_algorithm(field);
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
    std::sort(out.begin(), out.end(), [](Algorithm a, Algorithm b) { return to_string(a) < to_string(b); });
    return out;
}

void validate(const SimConfig& cfg) {
    if (cfg.n < 2 || cfg.n > kMaxGridSide) {
        throw std::invalid_argument("n must lie in [2, " + std::to_string(kMaxGridSide) + "], got " +
                                    std::to_string(cfg.n));
    }
    if (cfg.s < 1 || cfg.s > static_cast<long long>(cfg.n) * cfg.n) {
        throw std::invalid_argument("seed count must lie in [1, n^2], got " + std::to_string(cfg.s));
    }
    if (cfg.steps < 1) throw std::invalid_argument("steps must be >= 1, got " + std::to_string(cfg.steps));
    if (cfg.d_max < 0) throw std::invalid_argument("d_max must be >= 0, got " + std::to_string(cfg.d_max));
    if (cfg.algorithms.empty()) throw std::invalid_argument("at least one algorithm is required");
    if (cfg.extra_rounds < 0 || cfg.extra_rounds > 2) {
        throw std::invalid_argument("extra_rounds must be 0, 1 or 2, got " + std::to_string(cfg.extra_rounds));
    }
    if (cfg.vn_phase_waves < 0 || cfg.vn_phase_waves > 2) {
        throw std::invalid_argument("vn_phase_waves must be 0, 1 or 2, got " + std::to_string(cfg.vn_phase_waves));
    }
    if (cfg.frame_every < 0) throw std::invalid_argument("frame_every must be >= 0");
    if (cfg.frame_every > 0 && cfg.frames_dir.empty()) {
        throw std::invalid_argument("frame_every needs a frames directory");
    }
    if (cfg.exec.threads < 1) throw std::invalid_argument("threads must be >= 1");
    if (!isa_available(cfg.exec.isa)) {
        throw std::invalid_argument("kernel ISA " + std::string(to_string(cfg.exec.isa)) + " unavailable");
    }
}

SimulationResult run_simulation(const SimConfig& cfg) {
    validate(cfg);

    std::vector<Algorithm> algorithms = cfg.algorithms;
    std::sort(algorithms.begin(), algorithms.end(),
              [](Algorithm a, Algorithm b) { return to_string(a) < to_string(b); });
    algorithms.erase(std::unique(algorithms.begin(), algorithms.end()), algorithms.end());

    const bool wants_jfa = std::find(algorithms.begin(), algorithms.end(), Algorithm::Jfa) != algorithms.end();
    const bool needs_baseline = !wants_jfa || algorithms.size() > 1;
    const bool write_frames = cfg.frame_every > 0;
    if (write_frames) std::filesystem::create_directories(cfg.frames_dir);

    SimulationResult result;
    auto flush = [&] {
        if (cfg.csv_path.empty()) return;
        std::vector<MetricsRecord> all = result.bootstrap;
        all.insert(all.end(), result.records.begin(), result.records.end());
        export_csv(all, cfg.csv_path);
    };

    auto make_record = [&](int step, Algorithm a, int waves, double secs, double sim) {
        MetricsRecord r;
        r.step = step;
        r.algorithm = std::string(to_string(a));
        r.n = cfg.n;
        r.s = cfg.s;
        r.d_max = cfg.d_max;
        r.wave_count = waves;
        r.elapsed_seconds = secs;
        r.similarity_pct = sim;
        return r;
    };

    try {
        SeedSet seeds = init_uniform_seeds(cfg.n, cfg.s, cfg.rng_seed);
        const MotionConfig motion{cfg.d_max, cfg.rng_seed};

        // Dynamic variants start from a full JFA of the initial positions.
        std::map<Algorithm, VoronoiGrid> previous;
        if (std::any_of(algorithms.begin(), algorithms.end(), is_dynamic)) {
            const VoronoiGrid initial = run_jfa(seeds, DistanceMetric::Euclidean, cfg.extra_rounds, cfg.exec).grid;
            for (const Algorithm a : algorithms) {
                if (!is_dynamic(a)) continue;
                const auto start = Clock::now();
                FloodResult boot = run_jfa(seeds, metric_of(a), cfg.extra_rounds, cfg.exec);
                const double secs = seconds_since(start);
                result.bootstrap.push_back(make_record(0, a, boot.waves, secs, similarity(boot.grid, initial)));
                previous.emplace(a, std::move(boot.grid));
            }
        }

        const DjfaParams base_params{std::max(cfg.d_max, 1), DistanceMetric::Euclidean, cfg.vn_phase_waves,
                                     cfg.extra_rounds};

        for (int step = 1; step <= cfg.steps; ++step) {
            seeds = move_seeds(seeds, motion, static_cast<std::uint64_t>(step));
            const bool frame_step = write_frames && step % cfg.frame_every == 0;

            std::optional<VoronoiGrid> baseline;
            if (wants_jfa) {
                const auto start = Clock::now();
                FloodResult jfa = run_jfa(seeds, DistanceMetric::Euclidean, cfg.extra_rounds, cfg.exec);
                const double secs = seconds_since(start);
                result.records.push_back(make_record(step, Algorithm::Jfa, jfa.waves, secs, 100.0));
                if (frame_step) export_image(jfa.grid, seeds, frame_path(cfg.frames_dir, Algorithm::Jfa, step));
                baseline = std::move(jfa.grid);
            } else if (needs_baseline) {
                baseline = run_jfa(seeds, DistanceMetric::Euclidean, cfg.extra_rounds, cfg.exec).grid;
            }

            for (const Algorithm a : algorithms) {
                if (a == Algorithm::Jfa) continue;
                int waves = 0;
                double secs = 0.0;
                VoronoiGrid grid(cfg.n);
                if (is_dynamic(a)) {
                    DjfaParams params = base_params;
                    params.metric = metric_of(a);
                    VoronoiGrid& prev = previous.at(a);
                    const auto start = Clock::now();
                    FloodResult out = run_djfa_step(prev, seeds, params, cfg.exec);
                    secs = seconds_since(start);
                    waves = out.waves;
                    prev = out.grid;
                    grid = std::move(out.grid);
                } else if (a == Algorithm::Stf) {
                    const auto start = Clock::now();
                    StfResult out = run_stf(seeds, DistanceMetric::Euclidean, cfg.exec);
                    secs = seconds_since(start);
                    waves = out.waves;
                    grid = std::move(out.grid);
                } else {
                    const auto start = Clock::now();
                    grid = run_exact(seeds, DistanceMetric::Euclidean);
                    secs = seconds_since(start);
                }
                result.records.push_back(make_record(step, a, waves, secs, similarity(grid, *baseline)));
                if (frame_step) export_image(grid, seeds, frame_path(cfg.frames_dir, a, step));
            }
        }
    } catch (...) {
        sort_records(result.records);
        flush();
        throw;
    }

    sort_records(result.records);
    flush();
    return result;
}

std::vector<SweepRow> sweep(const SimConfig& base, const std::vector<int>& n_values,
                            const std::vector<long long>& s_values) {
    if (n_values.empty() || s_values.empty()) {
        throw std::invalid_argument("sweep needs at least one n and one s value");
    }
    std::vector<SweepRow> rows;
    for (const int n : n_values) {
        for (const long long s : s_values) {
            SimConfig cfg = base;
            cfg.n = n;
            cfg.s = s;
            cfg.csv_path.clear();
            cfg.frames_dir.clear();
            cfg.frame_every = 0;
            try {
                const SimulationResult sim = run_simulation(cfg);
                const auto totals = cumulative_times(sim.records);
                const auto jfa_total = totals.find(std::string(to_string(Algorithm::Jfa)));
                for (const auto& [name, secs] : totals) {
                    SweepRow row;
                    row.n = n;
                    row.s = s;
                    row.d_max = cfg.d_max;
                    row.steps = cfg.steps;
                    row.algorithm = name;
                    row.cumulative_seconds = secs;
                    double sim_sum = 0.0;
                    int count = 0;
                    for (const auto& r : sim.records) {
                        if (r.algorithm != name) continue;
                        sim_sum += r.similarity_pct;
                        row.waves_per_step = std::max(row.waves_per_step, r.wave_count);
                        ++count;
                    }
                    row.mean_similarity_pct = count > 0 ? sim_sum / count : 0.0;
                    if (jfa_total != totals.end() && jfa_total->second > 0.0 && secs > 0.0) {
                        row.speedup_vs_jfa = speedup(jfa_total->second, secs);
                    }
                    rows.push_back(std::move(row));
                }
            } catch (const std::exception& e) {
                SweepRow row;
                row.n = n;
                row.s = s;
                row.d_max = cfg.d_max;
                row.steps = cfg.steps;
                row.error = e.what();
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

void write_csv(std::ostream& out, std::vector<MetricsRecord> records) {
    sort_records(records);
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.step << ',' << r.algorithm << ',' << r.n << ',' << r.s << ',' << r.d_max << ',' << r.wave_count
            << ',' << format_double(r.elapsed_seconds) << ',' << format_double(r.similarity_pct) << '\n';
    }
}

void export_csv(const std::vector<MetricsRecord>& records, const std::filesystem::path& path) {
    std::ostringstream buffer;
    write_csv(buffer, records);
    write_file(path, buffer.str());
}

std::vector<MetricsRecord> parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw std::runtime_error("missing or unexpected CSV header");
    }
    std::vector<MetricsRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 8) {
            throw std::runtime_error("expected 8 fields, got " + std::to_string(fields.size()) + " in '" + line + "'");
        }
        MetricsRecord r;
        r.step = parse_number<int>(fields[0], "step");
        r.algorithm = std::string(fields[1]);
        r.n = parse_number<int>(fields[2], "n");
        r.s = parse_number<long long>(fields[3], "s");
        r.d_max = parse_number<int>(fields[4], "d_max");
        r.wave_count = parse_number<int>(fields[5], "wave_count");
        r.elapsed_seconds = parse_number<double>(fields[6], "elapsed_seconds");
        r.similarity_pct = parse_number<double>(fields[7], "similarity_pct");
        records.push_back(std::move(r));
    }
    return records;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kSweepCsvHeader << '\n';
    for (const auto& r : rows) {
        std::string error = r.error;
        std::replace(error.begin(), error.end(), ',', ';');
        std::replace(error.begin(), error.end(), '\n', ' ');
        out << r.n << ',' << r.s << ',' << r.d_max << ',' << r.steps << ',' << r.algorithm << ',' << r.waves_per_step
            << ',' << format_double(r.cumulative_seconds) << ',' << format_double(r.mean_similarity_pct) << ','
            << (r.speedup_vs_jfa ? format_double(*r.speedup_vs_jfa) : std::string()) << ',' << error << '\n';
    }
}

void export_sweep_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
    std::ostringstream buffer;
    write_sweep_csv(buffer, rows);
    write_file(path, buffer.str());
}

Rgb region_color(SeedId id) {
    const std::uint64_t h = mix64(static_cast<std::uint64_t>(static_cast<std::uint32_t>(id)) ^ 0x5eedc0105ULL);
    auto channel = [h](int shift) { return static_cast<std::uint8_t>(40 + ((h >> shift) & 0xff) % 216); };
    return {channel(0), channel(8), channel(16)};
}

std::string encode_ppm(const VoronoiGrid& grid, const SeedSet& seeds) {
    if (!grid.is_complete()) throw std::invalid_argument("cannot render an incomplete grid");
    if (grid.n() != seeds.n()) throw std::invalid_argument("grid and seed set sizes differ");

    const int n = grid.n();
    std::string bytes = "P6\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
    const std::size_t header = bytes.size();
    bytes.resize(header + grid.pixel_count() * 3);

    std::size_t o = header;
    for (const SeedId c : grid.claims()) {
        const Rgb rgb = region_color(c);
        bytes[o++] = static_cast<char>(rgb.r);
        bytes[o++] = static_cast<char>(rgb.g);
        bytes[o++] = static_cast<char>(rgb.b);
    }
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        const std::size_t p = header + 3 * (static_cast<std::size_t>(seeds.ys()[i]) * static_cast<std::size_t>(n) +
                                            static_cast<std::size_t>(seeds.xs()[i]));
        bytes[p] = bytes[p + 1] = bytes[p + 2] = 0;
    }
    return bytes;
}

void export_image(const VoronoiGrid& grid, const SeedSet& seeds, const std::filesystem::path& path) {
    write_file(path, encode_ppm(grid, seeds));
}

}  // namespace jumpflood
