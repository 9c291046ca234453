#pragma once

// H-systems: a ground set B = {0..m-1} plus neighborhood conditions H_i. The
// l-condition asks that every point outside H_l avoid the affine hull of the
// points of H_l. realize_hsystem finds points on a unit sphere S^k meeting all
// conditions by growing k only when a condition is large enough to need it.

#include <cstdint>
#include <span>
#include <vector>

#include "udg/geom.hpp"

namespace udg {

struct HSystem {
    int m = 0;
    /// Non-full conditions, sorted by nondecreasing size; each sorted.
    std::vector<std::vector<int>> conditions;
    /// Number of full conditions (|H| = m), held separately.
    int s = 0;

    /// Sorts, splits out full conditions and validates indices. Throws
    /// std::invalid_argument on an index outside [0, m) or a repeated index.
    static HSystem from_conditions(int m, std::vector<std::vector<int>> all_conditions);

    std::vector<int> sizes() const;
};

struct FlatnessBudget {
    double eps = 0.01;

    /// Rotation angle of the g-th growth step (0-based): eps * 2^{-g-4}.
    /// The angles sum to eps / 8 < eps / 4.
    double rotation(int growth_index) const;
};

struct HSystemRealization {
    int k = 0;
    /// m points on the unit sphere S^k in R^{k+1}.
    std::vector<Point> points;
    /// Pole e_0; every point is within angle eps of it.
    Point pole;
};

/// Indices of conditions violated by `points` (affine rank test with
/// tol::rank). Empty conditions are vacuous.
std::vector<int> violated_conditions(std::span<const Point> points, const HSystem& h);

/// Max angle between a chord x_i - x_j and the hyperplane orthogonal to
/// `pole`, in radians; 0 for fewer than two points.
double max_chord_tilt(std::span<const Point> points, const Point& pole);

/// Realizes the non-full conditions of `h` on a unit sphere. Starts with m
/// general-position points near the pole of a circle. A condition of size at
/// least k + 2 raises k by one: the points rotate by a small angle into the
/// new coordinate, towards +e_{k+1} for members of the condition and -e_{k+1}
/// otherwise. Smaller conditions are met by resampling in general position
/// within a cap of angular radius eps/4. The returned k equals
/// lemedge2_guarantee(sizes).k_realizable. Throws ConstructionFailure after
/// max_retries failed attempts, std::invalid_argument if a full condition is
/// present in `h.conditions`.
HSystemRealization realize_hsystem(const HSystem& h, const FlatnessBudget& budget, std::uint64_t seed,
                                   int max_retries = 50);

}  // namespace udg
