// AVX2 wave kernel. Eight consecutive pixels of one row per iteration:
// neighbor claims are contiguous loads along x, seed coordinates come from
// 32-bit gathers. Built with -mavx2; only reached through runtime dispatch.

#include <jumpflood/kernels.hpp>

#include <array>
#include <cstdint>

#include <immintrin.h>

namespace jumpflood::kernels {

namespace {

constexpr int kLanes = 8;

struct LaneState {
    __m256i id;
    __m256i cost;
};

inline __m256i lane_cost(DistanceMetric metric, __m256i ids, __m256i xv, __m256i yv, const std::int32_t* sx,
                         const std::int32_t* sy, __m256i& empty_mask) {
    empty_mask = _mm256_cmpeq_epi32(ids, _mm256_set1_epi32(kEmpty));
    // EMPTY lanes gather seed 0; their cost is replaced below.
    const __m256i safe = _mm256_andnot_si256(empty_mask, ids);
    const __m256i gx = _mm256_i32gather_epi32(sx, safe, 4);
    const __m256i gy = _mm256_i32gather_epi32(sy, safe, 4);
    const __m256i dx = _mm256_sub_epi32(gx, xv);
    const __m256i dy = _mm256_sub_epi32(gy, yv);
    __m256i cost;
    if (metric == DistanceMetric::Euclidean) {
        cost = _mm256_add_epi32(_mm256_mullo_epi32(dx, dx), _mm256_mullo_epi32(dy, dy));
    } else {
        cost = _mm256_add_epi32(_mm256_abs_epi32(dx), _mm256_abs_epi32(dy));
    }
    return _mm256_blendv_epi8(cost, _mm256_set1_epi32(kInfiniteCost), empty_mask);
}

inline void take_better(LaneState& best, __m256i cand, __m256i cand_cost) {
    const __m256i lower_cost = _mm256_cmpgt_epi32(best.cost, cand_cost);
    const __m256i tie = _mm256_and_si256(_mm256_cmpeq_epi32(best.cost, cand_cost), _mm256_cmpgt_epi32(best.id, cand));
    const __m256i better = _mm256_or_si256(lower_cost, tie);
    best.id = _mm256_blendv_epi8(best.id, cand, better);
    best.cost = _mm256_blendv_epi8(best.cost, cand_cost, better);
}

// Same rule as the scalar reference, for the row tail that does not fill a
// full vector.
void wave_pixel(const WaveArgs& a, int x, int y) {
    const int n = a.n;
    const auto width = static_cast<std::size_t>(n);
    const std::size_t q = static_cast<std::size_t>(y) * width + static_cast<std::size_t>(x);

    SeedId best = a.in[q];
    std::int32_t best_cost = kInfiniteCost;
    if (best != kEmpty) {
        const auto b = static_cast<std::size_t>(best);
        best_cost = metric_cost(a.metric, a.seed_x[b] - x, a.seed_y[b] - y);
    }
    for (const Offset o : a.offsets) {
        const int nx = x + o.dx;
        const int ny = y + o.dy;
        if (nx < 0 || nx >= n || ny < 0 || ny >= n) continue;
        const SeedId cand = a.in[static_cast<std::size_t>(ny) * width + static_cast<std::size_t>(nx)];
        if (cand == kEmpty) continue;
        const auto c = static_cast<std::size_t>(cand);
        const std::int32_t cost = metric_cost(a.metric, a.seed_x[c] - x, a.seed_y[c] - y);
        if (claim_beats(cost, cand, best_cost, best)) {
            best = cand;
            best_cost = cost;
        }
    }
    a.out[q] = best;
}

}  // namespace

void wave_rows_avx2(const WaveArgs& a) {
    const int n = a.n;
    const auto width = static_cast<std::size_t>(n);
    const SeedId* in = a.in.data();
    SeedId* out = a.out.data();
    const std::int32_t* sx = a.seed_x.data();
    const std::int32_t* sy = a.seed_y.data();
    const __m256i lane_index = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    const int vector_end = n - n % kLanes;

    alignas(32) std::array<SeedId, kLanes> staging{};

    for (int y = a.row_begin; y < a.row_end; ++y) {
        const std::size_t row = static_cast<std::size_t>(y) * width;
        const __m256i yv = _mm256_set1_epi32(y);

        for (int x0 = 0; x0 < vector_end; x0 += kLanes) {
            const __m256i xv = _mm256_add_epi32(_mm256_set1_epi32(x0), lane_index);

            LaneState best;
            __m256i empty_mask;
            best.id = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + row + static_cast<std::size_t>(x0)));
            best.cost = lane_cost(a.metric, best.id, xv, yv, sx, sy, empty_mask);

            for (const Offset o : a.offsets) {
                const int ny = y + o.dy;
                if (ny < 0 || ny >= n) continue;
                const int lo = x0 + o.dx;
                const int hi = lo + kLanes - 1;
                if (hi < 0 || lo >= n) continue;

                const SeedId* src = in + static_cast<std::size_t>(ny) * width;
                __m256i cand;
                if (lo >= 0 && hi < n) {
                    cand = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + lo));
                } else {
                    for (int lane = 0; lane < kLanes; ++lane) {
                        const int nx = lo + lane;
                        staging[static_cast<std::size_t>(lane)] = (nx >= 0 && nx < n) ? src[nx] : kEmpty;
                    }
                    cand = _mm256_load_si256(reinterpret_cast<const __m256i*>(staging.data()));
                }

                const __m256i cand_cost = lane_cost(a.metric, cand, xv, yv, sx, sy, empty_mask);
                if (_mm256_movemask_epi8(empty_mask) == -1) continue;
                take_better(best, cand, cand_cost);
            }

            _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + row + static_cast<std::size_t>(x0)), best.id);
        }

        for (int x = vector_end; x < n; ++x) {
            wave_pixel(a, x, y);
        }
    }
}

}  // namespace jumpflood::kernels
