#include <gtest/gtest.h>

#include <cmath>

#include "udg/embed.hpp"
#include "udg/rng.hpp"
#include "udg/verify.hpp"

using udg::Point;

namespace {

udg::Embedding square() {
    udg::Embedding e{2, {}};
    for (auto [x, y] : {std::pair{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}) {
        e.points.push_back(Eigen::Vector2d(x, y));
    }
    return e;
}

udg::Embedding simplex() {
    udg::Embedding e{3, {}};
    e.points.push_back(Eigen::Vector3d(0, 0, 0));
    e.points.push_back(Eigen::Vector3d(1, 0, 0));
    e.points.push_back(Eigen::Vector3d(0.5, std::sqrt(3.0) / 2, 0));
    e.points.push_back(Eigen::Vector3d(0.5, std::sqrt(3.0) / 6, std::sqrt(2.0 / 3.0)));
    return e;
}

}  // namespace

TEST(InducedUdg, Examples) {
    EXPECT_EQ(udg::induced_udg(square().points, 1e-9).graph, udg::make_cycle(4));
    std::vector<Point> line = {Eigen::VectorXd::Constant(1, 0.0), Eigen::VectorXd::Constant(1, 1.0),
                               Eigen::VectorXd::Constant(1, 2.0)};
    EXPECT_EQ(udg::induced_udg(line, 1e-9).graph, udg::make_path(3));
    EXPECT_EQ(udg::induced_udg(simplex().points, 1e-9).graph, udg::make_complete(4));
}

TEST(InducedUdg, CoincidentPointsThrow) {
    std::vector<Point> pts = {Eigen::Vector2d(0, 0), Eigen::Vector2d(0, 1e-12)};
    EXPECT_THROW(udg::induced_udg(pts, 1e-9), udg::CoincidentPoints);
}

TEST(InducedUdg, NearMissBand) {
    std::vector<Point> pts = {Eigen::Vector2d(0, 0), Eigen::Vector2d(1.0 + 2e-9, 0), Eigen::Vector2d(5, 5)};
    const auto r = udg::induced_udg(pts, 1e-9);
    EXPECT_EQ(r.graph.edge_count(), 0u);
    ASSERT_EQ(r.near_misses.size(), 1u);
    EXPECT_EQ(r.near_misses[0].i, 0);
    EXPECT_EQ(r.near_misses[0].j, 1);
}

TEST(InducedUdg, InvariantUnderRigidMotions) {
    udg::Rng rng = udg::make_rng(21);
    const udg::Embedding base = simplex();
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::MatrixXd m(3, 3);
        for (int i = 0; i < 3; ++i) {
            m.col(i) = udg::gaussian_vector(rng, 3);
        }
        const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ();
        const Point t = udg::gaussian_vector(rng, 3);
        std::vector<Point> moved;
        for (const auto& p : base.points) {
            moved.push_back(q * p + t);
        }
        EXPECT_EQ(udg::induced_udg(moved, 1e-9).graph, udg::make_complete(4));
    }
}

TEST(Verify, Modes) {
    EXPECT_TRUE(udg::verify(udg::make_complete(4), simplex(), udg::Mode::faithful, 1e-9).pass);
    EXPECT_TRUE(udg::verify(udg::make_cycle(4), square(), udg::Mode::faithful, 1e-9).pass);
    const auto r = udg::verify(udg::make_complete(4), square(), udg::Mode::distance, 1e-9);
    EXPECT_FALSE(r.pass);
    ASSERT_EQ(r.violations.size(), 2u);
    for (const auto& v : r.violations) {
        EXPECT_EQ(v.kind, udg::ViolationKind::edge_not_unit);
        EXPECT_NEAR(v.distance, std::sqrt(2.0), 1e-12);
    }
}

TEST(Verify, FaithfulFlagsExtraUnitPairs) {
    const auto r = udg::verify(udg::make_path(4), square(), udg::Mode::faithful, 1e-9);
    EXPECT_FALSE(r.pass);
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0].kind, udg::ViolationKind::nonedge_unit);
    EXPECT_TRUE(udg::verify(udg::make_path(4), square(), udg::Mode::distance, 1e-9).pass);
}

TEST(Verify, SizeMismatchThrows) {
    EXPECT_THROW(udg::verify(udg::make_path(3), square(), udg::Mode::distance, 1e-9), std::invalid_argument);
}

TEST(Verify, K33FromOrthogonalCircles) {
    const auto k33 = udg::make_complete_multipartite(std::vector<int>{3, 3});
    const auto e = udg::embed_colorable(k33, {{0, 1, 2}, {3, 4, 5}});
    EXPECT_EQ(e.dim, 4);
    EXPECT_TRUE(udg::verify(k33, e, udg::Mode::distance, 1e-9).pass);
    // Induced graph contains every cross-class pair.
    const auto induced = udg::induced_udg(e.points, 1e-9).graph;
    for (const auto& [u, v] : k33.edges()) {
        EXPECT_TRUE(induced.adjacent(u, v));
    }
}

TEST(Verify, FaithfulPassImpliesDistancePass) {
    udg::Rng rng = udg::make_rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        udg::Embedding e{2, {}};
        for (int i = 0; i < 5; ++i) {
            e.points.push_back(udg::random_in_ball(rng, 2, 1.5));
        }
        // Snap one pair to unit distance so graphs are not always empty.
        e.points[1] = e.points[0] + Eigen::Vector2d(1, 0);
        const auto g = udg::induced_udg(e.points, 1e-9).graph;
        ASSERT_TRUE(udg::verify(g, e, udg::Mode::faithful, 1e-9).pass);
        EXPECT_TRUE(udg::verify(g, e, udg::Mode::distance, 1e-9).pass);
    }
}
