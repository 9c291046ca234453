#pragma once

#include <cstddef>
#include <cstdint>

namespace udg::kernels::detail {

void pairwise_sq_dist_scalar(const double* coords, std::size_t n, std::size_t dim, double* out);
double edge_objective_scalar(const double* coords, std::size_t n, std::size_t dim, const std::int32_t* eu,
                             const std::int32_t* ev, std::size_t edge_count, double* grad);

#if defined(UDG_HAVE_AVX2_KERNELS)
void pairwise_sq_dist_avx2(const double* coords, std::size_t n, std::size_t dim, double* out);
double edge_objective_avx2(const double* coords, std::size_t n, std::size_t dim, const std::int32_t* eu,
                           const std::int32_t* ev, std::size_t edge_count, double* grad);
#endif

}  // namespace udg::kernels::detail
