#pragma once

// Every random choice in the toolkit flows from one user seed. Independent
// work items (restarts, attempts) draw from derived streams so results do not
// depend on execution order.

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace udg {

using Rng = std::mt19937_64;

/// splitmix64 of (seed, stream).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) { return Rng(derive_seed(seed, stream)); }

double uniform(Rng& rng, double lo, double hi);
Eigen::VectorXd gaussian_vector(Rng& rng, int dim);
/// Uniform direction; for dim == 1 this is +-1, for dim == 0 an empty vector.
Eigen::VectorXd random_unit_vector(Rng& rng, int dim);
/// Uniform in the closed ball of the given radius around the origin.
Eigen::VectorXd random_in_ball(Rng& rng, int dim, double radius);

}  // namespace udg
