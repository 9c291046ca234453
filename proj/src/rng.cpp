#include "udg/rng.hpp"

#include <cmath>

namespace udg {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Eigen::VectorXd gaussian_vector(Rng& rng, int dim) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) {
        v(i) = normal(rng);
    }
    return v;
}

Eigen::VectorXd random_unit_vector(Rng& rng, int dim) {
    if (dim == 0) {
        return Eigen::VectorXd(0);
    }
    for (;;) {
        Eigen::VectorXd v = gaussian_vector(rng, dim);
        const double norm = v.norm();
        if (norm > 1e-12) {
            return v / norm;
        }
    }
}

Eigen::VectorXd random_in_ball(Rng& rng, int dim, double radius) {
    const double scale = radius * std::pow(uniform(rng, 0.0, 1.0), 1.0 / static_cast<double>(dim));
    return scale * random_unit_vector(rng, dim);
}

}  // namespace udg
