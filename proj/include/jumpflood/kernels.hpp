#pragma once
// Wave kernels: one gather pass of claim propagation over a band of rows.
//
// Every backend computes, for each output pixel q in [row_begin, row_end),
// the claim minimizing metric_cost(seed(c) - q) over c in
// {in[q]} U {in[q + o] : o in offsets, q + o inside the grid},
// with the lower id winning ties. Backends must agree bit for bit.

#include <jumpflood/core.hpp>

#include <cstdint>
#include <span>
#include <string_view>

namespace jumpflood {

enum class KernelIsa : std::uint8_t { Scalar, Avx2 };

std::string_view to_string(KernelIsa isa);

struct WaveArgs {
    int n = 0;
    std::span<const SeedId> in;
    std::span<SeedId> out;
    std::span<const std::int32_t> seed_x;
    std::span<const std::int32_t> seed_y;
    std::span<const Offset> offsets;
    DistanceMetric metric = DistanceMetric::Euclidean;
    int row_begin = 0;
    int row_end = 0;
};

namespace kernels {

void wave_rows_scalar(const WaveArgs& args);

/// Only callable when avx2_available() is true.
void wave_rows_avx2(const WaveArgs& args);

/// Compiled in and supported by the running CPU.
bool avx2_available() noexcept;

}  // namespace kernels

/// Best ISA for this process. JUMPFLOOD_ISA=scalar in the environment
/// forces the reference kernel.
KernelIsa detect_isa() noexcept;

bool isa_available(KernelIsa isa) noexcept;

/// Execution knobs for wave passes. Results never depend on them.
struct ExecPolicy {
    KernelIsa isa = detect_isa();
    unsigned threads = 1;
};

/// Runs one wave over all rows, splitting rows across policy.threads
/// workers. Throws std::invalid_argument on inconsistent buffer sizes or an
/// unavailable ISA.
void run_wave(const WaveArgs& args, const ExecPolicy& policy);

}  // namespace jumpflood
