#pragma once

// Data-parallel inner loops shared by the verifier and the numeric solver.
//
// Point sets are passed in structure-of-arrays layout: coordinate c of point i
// lives at coords[c * n + i]. Every kernel has a scalar reference version;
// SIMD variants must agree with it to rounding (see tests/test_kernels.cpp).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "udg/geom.hpp"

namespace udg::kernels {

enum class Isa { scalar, avx2 };

/// Fills out[i * n + j] with |x_i - x_j|^2 for all i, j.
using PairwiseSqDistFn = void (*)(const double* coords, std::size_t n, std::size_t dim, double* out);

/// Returns sum over edges of (|x_u - x_v|^2 - 1)^2. When `grad` is non-null it
/// is overwritten with the gradient (same SoA layout as `coords`).
using EdgeObjectiveFn = double (*)(const double* coords, std::size_t n, std::size_t dim,
                                   const std::int32_t* eu, const std::int32_t* ev, std::size_t edge_count,
                                   double* grad);

struct KernelTable {
    Isa isa;
    std::string_view name;
    PairwiseSqDistFn pairwise_sq_dist;
    EdgeObjectiveFn edge_objective;
};

const KernelTable& scalar_table();

/// nullptr when the variant was not compiled into this build.
const KernelTable* avx2_table();

/// Compiled in and supported by the running CPU.
bool available(Isa isa);

/// The table selected for this process: the widest available ISA, unless the
/// environment variable UDG_KERNELS=scalar forces the reference path. The
/// choice is made once.
const KernelTable& active();

/// Table for a specific ISA; throws std::runtime_error if unavailable.
const KernelTable& table(Isa isa);

/// SoA copy of a list of equal-length points.
std::vector<double> to_soa(std::span<const Point> points);

/// Pairwise distances (not squared), row-major n x n, using the active table.
std::vector<double> pairwise_distances(std::span<const Point> points);

}  // namespace udg::kernels
