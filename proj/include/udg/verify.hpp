#pragma once

// Ground truth: the unit-distance graph a point set induces, and comparison
// of a target graph against an embedding in either semantics.

#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "udg/embedding.hpp"
#include "udg/graph.hpp"

namespace udg {

enum class Mode { faithful, distance };

/// A pair whose distance is within (tol, 3 tol] of 1. Such pairs are not
/// edges but sit next to the tolerance cliff.
struct NearMiss {
    int i = 0;
    int j = 0;
    double distance = 0.0;
};

struct InducedGraph {
    Graph graph;
    std::vector<NearMiss> near_misses;
};

class CoincidentPoints : public std::invalid_argument {
public:
    CoincidentPoints(int i, int j, double distance);
    int i;
    int j;
    double distance;
};

/// Edge (i, j) iff ||x_i - x_j| - 1| <= tol. Throws CoincidentPoints when two
/// points are within tol of each other.
InducedGraph induced_udg(std::span<const Point> points, double tol);

enum class ViolationKind { edge_not_unit, nonedge_unit, coincident };

struct Violation {
    int i = 0;
    int j = 0;
    double distance = 0.0;
    ViolationKind kind = ViolationKind::edge_not_unit;
};

struct VerifyReport {
    bool pass = false;
    Mode mode = Mode::faithful;
    double tol = 0.0;
    std::vector<Violation> violations;
    std::vector<NearMiss> near_misses;
    double max_edge_error = 0.0;
    /// min over non-edges of ||x_i - x_j| - 1|.
    double min_nonedge_gap = std::numeric_limits<double>::infinity();
    double min_pair_distance = std::numeric_limits<double>::infinity();
};

/// Faithful: the induced unit-distance graph equals g. Distance: every edge
/// of g has unit length (non-edges unconstrained). In both modes coincident
/// points (distance <= tol) are violations. Throws std::invalid_argument when
/// the embedding size differs from g.n().
VerifyReport verify(const Graph& g, const Embedding& e, Mode mode, double tol);

const char* to_string(Mode mode);
const char* to_string(ViolationKind kind);

}  // namespace udg
