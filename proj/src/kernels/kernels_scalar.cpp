#include "kernels_impl.hpp"

namespace udg::kernels::detail {

void pairwise_sq_dist_scalar(const double* coords, std::size_t n, std::size_t dim, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i * n + i] = 0.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t c = 0; c < dim; ++c) {
                const double diff = coords[c * n + i] - coords[c * n + j];
                acc += diff * diff;
            }
            out[i * n + j] = acc;
            out[j * n + i] = acc;
        }
    }
}

double edge_objective_scalar(const double* coords, std::size_t n, std::size_t dim, const std::int32_t* eu,
                             const std::int32_t* ev, std::size_t edge_count, double* grad) {
    if (grad != nullptr) {
        for (std::size_t k = 0; k < n * dim; ++k) {
            grad[k] = 0.0;
        }
    }
    double total = 0.0;
    for (std::size_t e = 0; e < edge_count; ++e) {
        const auto u = static_cast<std::size_t>(eu[e]);
        const auto v = static_cast<std::size_t>(ev[e]);
        double sq = 0.0;
        for (std::size_t c = 0; c < dim; ++c) {
            const double diff = coords[c * n + u] - coords[c * n + v];
            sq += diff * diff;
        }
        const double r = sq - 1.0;
        total += r * r;
        if (grad != nullptr) {
            const double scale = 4.0 * r;
            for (std::size_t c = 0; c < dim; ++c) {
                const double g = scale * (coords[c * n + u] - coords[c * n + v]);
                grad[c * n + u] += g;
                grad[c * n + v] -= g;
            }
        }
    }
    return total;
}

}  // namespace udg::kernels::detail
