#include <jumpflood/kernels.hpp>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace jumpflood {

namespace kernels {

#if !JUMPFLOOD_HAVE_AVX2
void wave_rows_avx2(const WaveArgs&) {
    throw std::logic_error("AVX2 wave kernel not compiled into this build");
}
#endif

bool avx2_available() noexcept {
#if JUMPFLOOD_HAVE_AVX2
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

}  // namespace kernels

std::string_view to_string(KernelIsa isa) {
    return isa == KernelIsa::Avx2 ? "avx2" : "scalar";
}

bool isa_available(KernelIsa isa) noexcept {
    return isa == KernelIsa::Scalar || kernels::avx2_available();
}

KernelIsa detect_isa() noexcept {
    if (const char* forced = std::getenv("JUMPFLOOD_ISA"); forced != nullptr && std::string_view(forced) == "scalar") {
        return KernelIsa::Scalar;
    }
    return kernels::avx2_available() ? KernelIsa::Avx2 : KernelIsa::Scalar;
}

namespace {

void check_args(const WaveArgs& a) {
    const auto pixels = static_cast<std::size_t>(a.n) * static_cast<std::size_t>(a.n);
    if (a.n < 1 || a.in.size() != pixels || a.out.size() != pixels) {
        throw std::invalid_argument("wave buffers must hold n*n claims");
    }
    if (a.seed_x.size() != a.seed_y.size() || a.seed_x.empty()) {
        throw std::invalid_argument("seed coordinate arrays must be non-empty and equally sized");
    }
    if (a.row_begin < 0 || a.row_end > a.n || a.row_begin > a.row_end) {
        throw std::invalid_argument("row band out of range");
    }
    if (a.in.data() == a.out.data()) {
        throw std::invalid_argument("wave input and output must be distinct buffers");
    }
}

void run_band(const WaveArgs& a, KernelIsa isa) {
    if (isa == KernelIsa::Avx2) {
        kernels::wave_rows_avx2(a);
    } else {
        kernels::wave_rows_scalar(a);
    }
}

}  // namespace

void run_wave(const WaveArgs& args, const ExecPolicy& policy) {
    check_args(args);
    if (!isa_available(policy.isa)) {
        throw std::invalid_argument("kernel ISA " + std::string(to_string(policy.isa)) + " not available on this CPU");
    }

    const int rows = args.row_end - args.row_begin;
    const int workers = std::clamp(static_cast<int>(policy.threads), 1, std::max(rows, 1));
    if (workers == 1) {
        run_band(args, policy.isa);
        return;
    }

    // Each worker owns a disjoint band of output rows; the input is shared read-only.
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        WaveArgs band = args;
        band.row_begin = args.row_begin + rows * w / workers;
        band.row_end = args.row_begin + rows * (w + 1) / workers;
        pool.emplace_back([band, isa = policy.isa] { run_band(band, isa); });
    }
}

}  // namespace jumpflood
