#pragma once

#include <vector>

#include "udg/geom.hpp"

namespace udg {

inline constexpr double kTolDistinct = 1e-6;

/// One point of R^dim per vertex.
struct Embedding {
    int dim = 0;
    std::vector<Point> points;

    std::size_t size() const { return points.size(); }

    /// Every point has `dim` finite coordinates and all pairwise distances
    /// exceed `min_separation`.
    bool is_valid(double min_separation = kTolDistinct) const;

    /// Copy padded with zero coordinates up to `new_dim`.
    Embedding padded(int new_dim) const;
};

}  // namespace udg
