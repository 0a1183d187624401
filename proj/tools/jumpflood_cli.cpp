// jumpflood: moving-seed Voronoi simulation and sweep driver.
//
//   jumpflood simulate --n 512 --seeds 1024 --steps 100 --dmax 4 --csv run.csv
//   jumpflood sweep --n-values 256,512 --s-values 64,256,1024 --csv sweep.csv
//
// Every flag may also come from a key=value file passed with --config;
// flags given on the command line override the file.

#include <jumpflood/bench.hpp>
#include <jumpflood/djfa.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

void print_summary(const jumpflood::SimConfig& cfg, const jumpflood::SimulationResult& result) {
    const auto totals = jumpflood::cumulative_times(result.records);
    const double jfa = totals.count("jfa") ? totals.at("jfa") : 0.0;
    std::printf("n=%d s=%lld steps=%d d_max=%d extra_rounds=%d vn_waves=%d isa=%s\n", cfg.n, cfg.s, cfg.steps,
                cfg.d_max, cfg.extra_rounds, cfg.vn_phase_waves, std::string(to_string(cfg.exec.isa)).c_str());
    std::printf("L_avg=%.3f (region length = sqrt(region area))\n", jumpflood::avg_region_length(cfg.n, cfg.s));
    std::printf("%-16s %8s %14s %12s %10s\n", "algorithm", "waves", "cumulative_s", "mean_sim_%", "speedup");
    for (const auto& [name, secs] : totals) {
        double sim = 0.0;
        int waves = 0;
        int count = 0;
        for (const auto& r : result.records) {
            if (r.algorithm != name) continue;
            sim += r.similarity_pct;
            waves = r.wave_count;
            ++count;
        }
        const double ratio = (jfa > 0.0 && secs > 0.0) ? jfa / secs : 0.0;
        std::printf("%-16s %8d %14.6f %12.4f %10.3f\n", name.c_str(), waves, secs, count ? sim / count : 0.0, ratio);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Voronoi diagrams for moving seeds: JFA baseline vs dynamic JFA"};
    app.set_config("--config", "", "Read key=value settings from this file");
    app.require_subcommand(1);

    jumpflood::SimConfig cfg;
    std::vector<std::string> algorithms{"jfa", "djfa-euclidean", "djfa-manhattan"};
    std::string csv;
    std::string frames;
    std::string isa = "auto";
    std::vector<int> n_values{256, 512, 1024};
    std::vector<long long> s_values{64, 128, 256, 512, 1024, 2048, 4096};

    app.add_option("--n", cfg.n, "Grid side length in pixels")->capture_default_str();
    app.add_option("--seeds", cfg.s, "Number of seeds")->capture_default_str();
    app.add_option("--steps", cfg.steps, "Simulation steps")->capture_default_str();
    app.add_option("--dmax", cfg.d_max, "Max per-axis seed displacement per step")->capture_default_str();
    app.add_option("--rng-seed", cfg.rng_seed, "Random seed")->capture_default_str();
    app.add_option("--algorithms", algorithms, "Comma list of jfa, djfa-euclidean, djfa-manhattan, stf, exact")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--extra-rounds", cfg.extra_rounds, "Extra k=1 waves after each schedule (0-2)")
        ->capture_default_str();
    app.add_option("--vn-waves", cfg.vn_phase_waves, "Leading Von Neumann waves in dynamic JFA (0-2)")
        ->capture_default_str();
    app.add_option("--csv", csv, "CSV output path");
    app.add_option("--frames", frames, "Directory for PPM frames");
    app.add_option("--frame-every", cfg.frame_every, "Write frames every k steps (0 = never)")->capture_default_str();
    app.add_option("--threads", cfg.exec.threads, "Worker threads per wave")->capture_default_str();
    app.add_option("--isa", isa, "Wave kernel: auto, scalar or avx2")->capture_default_str();
    app.add_option("--n-values", n_values, "sweep: comma list of grid sides")->delimiter(',')->capture_default_str();
    app.add_option("--s-values", s_values, "sweep: comma list of seed counts")->delimiter(',')->capture_default_str();

    auto* simulate = app.add_subcommand("simulate", "Run one simulation and emit per-step records");
    auto* sweep = app.add_subcommand("sweep", "Run a simulation per (n, s) pair and emit aggregate rows");
    simulate->fallthrough();
    sweep->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        std::string joined;
        for (const auto& a : algorithms) joined += a + ',';
        cfg.algorithms = jumpflood::parse_algorithms(joined);
        cfg.frames_dir = frames;
        if (isa == "scalar") {
            cfg.exec.isa = jumpflood::KernelIsa::Scalar;
        } else if (isa == "avx2") {
            cfg.exec.isa = jumpflood::KernelIsa::Avx2;
        } else if (isa != "auto") {
            throw std::invalid_argument("--isa must be auto, scalar or avx2");
        }
        if (!frames.empty() && cfg.frame_every == 0) cfg.frame_every = 1;

        if (simulate->parsed()) {
            cfg.csv_path = csv;
            const auto result = jumpflood::run_simulation(cfg);
            print_summary(cfg, result);
        } else {
            jumpflood::validate(cfg);
            const auto rows = jumpflood::sweep(cfg, n_values, s_values);
            if (csv.empty()) {
                jumpflood::write_sweep_csv(std::cout, rows);
            } else {
                jumpflood::export_sweep_csv(rows, csv);
            }
            for (const auto& row : rows) {
                if (!row.error.empty()) {
                    std::cerr << "cell n=" << row.n << " s=" << row.s << " failed: " << row.error << '\n';
                }
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
