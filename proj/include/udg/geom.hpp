#pragma once

// Points, affine flats, circumscribed spheres and complementary spheres.

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace udg {

using Point = Eigen::VectorXd;

namespace tol {
/// Relative singular-value cutoff for affine rank decisions.
inline constexpr double rank = 1e-8;
inline constexpr double geom = 1e-9;
inline constexpr double ortho = 1e-12;
}  // namespace tol

/// base + span(basis). Columns of `basis` are orthonormal; zero columns means
/// the flat is the single point `base`.
struct AffineFlat {
    Point base;
    Eigen::MatrixXd basis;

    int dimension() const { return static_cast<int>(basis.cols()); }
    int ambient_dimension() const { return static_cast<int>(base.size()); }

    /// Orthonormality of the basis within tol::ortho.
    bool is_valid() const;
    /// Distance from `p` to the flat.
    double distance(const Point& p) const;
    /// Orthonormal basis of the directions orthogonal to this flat.
    Eigen::MatrixXd orthogonal_complement() const;
};

/// Sphere of any dimension living inside `flat`. A sphere of dimension -1
/// is a single point: radius 0 and a 0-dimensional flat.
struct Sphere {
    Point center;
    double radius = 0.0;
    AffineFlat flat;

    int dimension() const { return flat.dimension() - 1; }
    int ambient_dimension() const { return static_cast<int>(center.size()); }

    /// True when `p` lies on the sphere within `tolerance` (both in the flat
    /// and at distance `radius` from the center).
    bool contains(const Point& p, double tolerance = tol::geom) const;

    /// Point on the sphere given by unit direction coordinates in the flat
    /// basis (`direction.size() == flat.dimension()`).
    Point point_at(const Eigen::VectorXd& direction) const;
};

/// Dimension of the affine hull of `points` (0 for a single point).
/// Throws std::invalid_argument on an empty list or mixed dimensions.
int affine_rank(std::span<const Point> points, double relative_tol = tol::rank);

/// The unique sphere through affinely independent `points` inside their
/// affine hull. Throws std::invalid_argument for dependent or empty input.
Sphere circumsphere(std::span<const Point> points);

/// Indices of a maximal affinely independent subset, chosen greedily in
/// input order.
std::vector<int> affine_basis_indices(std::span<const Point> points, double relative_tol = tol::rank);

/// Smallest sphere containing co-spherical `points` (they may be affinely
/// dependent): the circumsphere of a maximal affinely independent subset.
Sphere minimal_sphere(std::span<const Point> points);

/// All points at distance exactly 1 from every point of `s`, viewed inside
/// R^ambient_dim. Requires s.radius < 1 and dim(s) <= ambient_dim - 2.
/// A sphere of radius 0 (a point) gives the unit sphere around it.
Sphere complementary_sphere(const Sphere& s, int ambient_dim);

/// Pads `p` with zeros up to `dim` coordinates.
Point embed_in(const Point& p, int dim);

}  // namespace udg
