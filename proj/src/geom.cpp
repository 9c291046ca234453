#include "udg/geom.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace udg {

namespace {

void check_common_dimension(std::span<const Point> points) {
    if (points.empty()) {
        throw std::invalid_argument("empty point list");
    }
    const auto dim = points.front().size();
    for (const auto& p : points) {
        if (p.size() != dim) {
            throw std::invalid_argument("points have mismatched dimensions: " + std::to_string(dim) +
                                        " vs " + std::to_string(p.size()));
        }
    }
}

// Columns are p_i - p_0, i >= 1.
Eigen::MatrixXd difference_matrix(std::span<const Point> points) {
    const auto dim = points.front().size();
    Eigen::MatrixXd diffs(dim, points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        diffs.col(static_cast<Eigen::Index>(i - 1)) = points[i] - points[0];
    }
    return diffs;
}

}  // namespace

bool AffineFlat::is_valid() const {
    if (basis.rows() != base.size() && basis.cols() > 0) {
        return false;
    }
    if (basis.cols() == 0) {
        return true;
    }
    const Eigen::MatrixXd gram = basis.transpose() * basis;
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(gram.rows(), gram.cols());
    return (gram - id).cwiseAbs().maxCoeff() <= tol::ortho;
}

double AffineFlat::distance(const Point& p) const {
    Eigen::VectorXd v = p - base;
    if (basis.cols() > 0) {
        v -= basis * (basis.transpose() * v);
    }
    return v.norm();
}

Eigen::MatrixXd AffineFlat::orthogonal_complement() const {
    const auto dim = base.size();
    if (basis.cols() == 0) {
        return Eigen::MatrixXd::Identity(dim, dim);
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
    const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(dim, dim);
    return q.rightCols(dim - basis.cols());
}

bool Sphere::contains(const Point& p, double tolerance) const {
    if (p.size() != center.size()) {
        return false;
    }
    return flat.distance(p) <= tolerance && std::abs((p - center).norm() - radius) <= tolerance;
}

Point Sphere::point_at(const Eigen::VectorXd& direction) const {
    if (direction.size() != flat.basis.cols()) {
        throw std::invalid_argument("direction size does not match sphere flat dimension");
    }
    if (flat.basis.cols() == 0) {
        return center;
    }
    return center + radius * (flat.basis * direction);
}

int affine_rank(std::span<const Point> points, double relative_tol) {
    check_common_dimension(points);
    if (points.size() == 1) {
        return 0;
    }
    const Eigen::MatrixXd diffs = difference_matrix(points);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(diffs);
    const Eigen::VectorXd& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) {
        return 0;
    }
    const double cutoff = relative_tol * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) {
            ++rank;
        }
    }
    return rank;
}

std::vector<int> affine_basis_indices(std::span<const Point> points, double relative_tol) {
    check_common_dimension(points);
    std::vector<int> chosen{0};
    std::vector<Point> current{points[0]};
    for (std::size_t i = 1; i < points.size(); ++i) {
        current.push_back(points[i]);
        if (affine_rank(current, relative_tol) == static_cast<int>(current.size()) - 1) {
            chosen.push_back(static_cast<int>(i));
        } else {
            current.pop_back();
        }
    }
    return chosen;
}

Sphere circumsphere(std::span<const Point> points) {
    check_common_dimension(points);
    const auto dim = points.front().size();
    const auto count = static_cast<int>(points.size());
    if (count > static_cast<int>(dim) + 1 || affine_rank(points) != count - 1) {
        throw std::invalid_argument("circumsphere needs affinely independent points");
    }
    Sphere s;
    if (count == 1) {
        s.center = points[0];
        s.radius = 0.0;
        s.flat = AffineFlat{points[0], Eigen::MatrixXd(dim, 0)};
        return s;
    }
    const Eigen::MatrixXd diffs = difference_matrix(points);
    // 2 v_i . (c - p_0) = |v_i|^2 with c - p_0 = V alpha.
    const Eigen::MatrixXd gram = diffs.transpose() * diffs;
    const Eigen::VectorXd rhs = 0.5 * gram.diagonal();
    const Eigen::VectorXd alpha = gram.ldlt().solve(rhs);
    s.center = points[0] + diffs * alpha;
    s.radius = (s.center - points[0]).norm();

    Eigen::HouseholderQR<Eigen::MatrixXd> qr(diffs);
    const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(dim, count - 1);
    s.flat = AffineFlat{s.center, q};
    return s;
}

Sphere minimal_sphere(std::span<const Point> points) {
    const auto idx = affine_basis_indices(points);
    std::vector<Point> basis_points;
    basis_points.reserve(idx.size());
    for (int i : idx) {
        basis_points.push_back(points[static_cast<std::size_t>(i)]);
    }
    return circumsphere(basis_points);
}

Sphere complementary_sphere(const Sphere& s, int ambient_dim) {
    if (!(s.radius < 1.0)) {
        throw std::invalid_argument("complementary sphere is empty for radius >= 1");
    }
    if (s.ambient_dimension() > ambient_dim) {
        throw std::invalid_argument("sphere does not fit in the requested ambient dimension");
    }
    if (s.dimension() > ambient_dim - 2) {
        throw std::invalid_argument("sphere dimension " + std::to_string(s.dimension()) +
                                    " exceeds ambient_dim - 2 = " + std::to_string(ambient_dim - 2));
    }
    AffineFlat flat{embed_in(s.center, ambient_dim), Eigen::MatrixXd::Zero(ambient_dim, s.flat.dimension())};
    if (s.flat.dimension() > 0) {
        flat.basis.topRows(s.flat.basis.rows()) = s.flat.basis;
    }
    Sphere out;
    out.center = flat.base;
    out.radius = std::sqrt(1.0 - s.radius * s.radius);
    out.flat = AffineFlat{flat.base, flat.orthogonal_complement()};
    return out;
}

Point embed_in(const Point& p, int dim) {
    if (p.size() > dim) {
        throw std::invalid_argument("cannot embed a point into fewer dimensions");
    }
    Point out = Point::Zero(dim);
    out.head(p.size()) = p;
    return out;
}

}  // namespace udg
