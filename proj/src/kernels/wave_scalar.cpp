#include <jumpflood/kernels.hpp>

namespace jumpflood::kernels {

void wave_rows_scalar(const WaveArgs& a) {
    const int n = a.n;
    const auto width = static_cast<std::size_t>(n);

    for (int y = a.row_begin; y < a.row_end; ++y) {
        for (int x = 0; x < n; ++x) {
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
    }
}

}  // namespace jumpflood::kernels
