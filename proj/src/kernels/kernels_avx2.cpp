// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include "kernels_impl.hpp"

#include <immintrin.h>

namespace udg::kernels::detail {

namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

}  // namespace

void pairwise_sq_dist_avx2(const double* coords, std::size_t n, std::size_t dim, double* out) {
    const std::size_t blocked = n - n % 4;
    for (std::size_t i = 0; i < n; ++i) {
        double* row = out + i * n;
        std::size_t j = 0;
        for (; j < blocked; j += 4) {
            __m256d acc = _mm256_setzero_pd();
            for (std::size_t c = 0; c < dim; ++c) {
                const __m256d xi = _mm256_set1_pd(coords[c * n + i]);
                const __m256d xj = _mm256_loadu_pd(coords + c * n + j);
                const __m256d diff = _mm256_sub_pd(xi, xj);
                acc = _mm256_fmadd_pd(diff, diff, acc);
            }
            _mm256_storeu_pd(row + j, acc);
        }
        for (; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t c = 0; c < dim; ++c) {
                const double diff = coords[c * n + i] - coords[c * n + j];
                acc += diff * diff;
            }
            row[j] = acc;
        }
    }
}

double edge_objective_avx2(const double* coords, std::size_t n, std::size_t dim, const std::int32_t* eu,
                           const std::int32_t* ev, std::size_t edge_count, double* grad) {
    if (grad != nullptr) {
        for (std::size_t k = 0; k < n * dim; ++k) {
            grad[k] = 0.0;
        }
    }
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d total = _mm256_setzero_pd();
    alignas(32) double r_lanes[4];

    const std::size_t blocked = edge_count - edge_count % 4;
    std::size_t e = 0;
    for (; e < blocked; e += 4) {
        const __m128i iu = _mm_loadu_si128(reinterpret_cast<const __m128i*>(eu + e));
        const __m128i iv = _mm_loadu_si128(reinterpret_cast<const __m128i*>(ev + e));
        __m256d sq = _mm256_setzero_pd();
        for (std::size_t c = 0; c < dim; ++c) {
            const double* base = coords + c * n;
            const __m256d xu = _mm256_i32gather_pd(base, iu, 8);
            const __m256d xv = _mm256_i32gather_pd(base, iv, 8);
            const __m256d diff = _mm256_sub_pd(xu, xv);
            sq = _mm256_fmadd_pd(diff, diff, sq);
        }
        const __m256d r = _mm256_sub_pd(sq, one);
        total = _mm256_fmadd_pd(r, r, total);
        if (grad != nullptr) {
            _mm256_store_pd(r_lanes, r);
            // Scatter is scalar: lanes may share endpoints.
            for (int lane = 0; lane < 4; ++lane) {
                const auto u = static_cast<std::size_t>(eu[e + lane]);
                const auto v = static_cast<std::size_t>(ev[e + lane]);
                const double scale = 4.0 * r_lanes[lane];
                for (std::size_t c = 0; c < dim; ++c) {
                    const double g = scale * (coords[c * n + u] - coords[c * n + v]);
                    grad[c * n + u] += g;
                    grad[c * n + v] -= g;
                }
            }
        }
    }
    double tail = 0.0;
    for (; e < edge_count; ++e) {
        const auto u = static_cast<std::size_t>(eu[e]);
        const auto v = static_cast<std::size_t>(ev[e]);
        double sq = 0.0;
        for (std::size_t c = 0; c < dim; ++c) {
            const double diff = coords[c * n + u] - coords[c * n + v];
            sq += diff * diff;
        }
        const double r = sq - 1.0;
        tail += r * r;
        if (grad != nullptr) {
            const double scale = 4.0 * r;
            for (std::size_t c = 0; c < dim; ++c) {
                const double g = scale * (coords[c * n + u] - coords[c * n + v]);
                grad[c * n + u] += g;
                grad[c * n + v] -= g;
            }
        }
    }
    return hsum(total) + tail;
}

}  // namespace udg::kernels::detail
