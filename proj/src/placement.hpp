#pragma once

// Shared A-side placement: put a vertex on the complementary sphere of its
// already placed neighborhood, at a random point that keeps every other
// pair away from unit distance.

#include <optional>
#include <span>
#include <vector>

#include "udg/embedding.hpp"
#include "udg/graph.hpp"
#include "udg/rng.hpp"

namespace udg::detail {

struct PlacementParams {
    double tol_construct = 1e-7;
    double margin_nonedge = 1e-4;
    double min_separation = 1e-6;
    int max_candidates = 64;
    /// Isolated vertices are drawn from a ball of this radius.
    double isolated_radius = 3.0;
};

using Positions = std::vector<std::optional<Point>>;

/// Whether `candidate` may be used for `v`: unit distance (within
/// tol_construct) to placed neighbors, at least margin_nonedge away from unit
/// distance for placed non-neighbors, and at least min_separation from all
/// placed vertices.
bool candidate_ok(const Graph& g, int v, const Point& candidate, const Positions& pos, const PlacementParams& params);

/// Places the vertices of `order` one at a time. Every neighbor of a vertex
/// must be placed before it. Returns false when some vertex has no admissible
/// candidate; `pos` is then partially filled.
bool place_on_complementary_spheres(const Graph& g, std::span<const int> order, Positions& pos, int dim, Rng& rng,
                                    const PlacementParams& params);

/// Requires every position to be set.
Embedding collect(const Positions& pos, int dim);

}  // namespace udg::detail
