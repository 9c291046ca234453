#include <gtest/gtest.h>

#include <random>

#include "udg/audit.hpp"
#include "udg/hsystem.hpp"

namespace {

udg::HSystem random_hsystem(std::mt19937_64& rng, int m, int count) {
    std::vector<std::vector<int>> conds;
    for (int i = 0; i < count; ++i) {
        const int size = static_cast<int>(rng() % static_cast<unsigned>(m));  // never full
        std::vector<int> all(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) {
            all[static_cast<std::size_t>(j)] = j;
        }
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(static_cast<std::size_t>(size));
        conds.push_back(all);
    }
    return udg::HSystem::from_conditions(m, conds);
}

void expect_on_unit_sphere(const udg::HSystemRealization& r) {
    for (const auto& p : r.points) {
        EXPECT_EQ(p.size(), r.k + 1);
        EXPECT_NEAR(p.norm(), 1.0, 1e-12);
    }
}

}  // namespace

TEST(HSystem, FromConditionsSortsAndSplitsFull) {
    const auto h = udg::HSystem::from_conditions(3, {{2, 1, 0}, {1}, {0, 2}, {0, 1, 2}});
    EXPECT_EQ(h.s, 2);
    EXPECT_EQ(h.sizes(), (std::vector<int>{1, 2}));
    EXPECT_EQ(h.conditions[1], (std::vector<int>{0, 2}));
    EXPECT_THROW(udg::HSystem::from_conditions(3, {{0, 3}}), std::invalid_argument);
    EXPECT_THROW(udg::HSystem::from_conditions(3, {{1, 1}}), std::invalid_argument);
}

TEST(FlatnessBudget, RotationsAreSummable) {
    const udg::FlatnessBudget b;
    double total = 0.0;
    for (int g = 0; g < 60; ++g) {
        EXPECT_GT(b.rotation(g), 0.0);
        if (g > 0) {
            EXPECT_LT(b.rotation(g), b.rotation(g - 1));
        }
        total += b.rotation(g);
    }
    EXPECT_LE(total, b.eps / 4.0);
}

TEST(RealizeHSystem, NoConditionsStaysOnCircle) {
    const auto h = udg::HSystem::from_conditions(4, {});
    const auto r = udg::realize_hsystem(h, {}, 0);
    EXPECT_EQ(r.k, 1);
    ASSERT_EQ(r.points.size(), 4u);
    expect_on_unit_sphere(r);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            EXPECT_GT((r.points[i] - r.points[j]).norm(), 1e-6);
        }
    }
}

TEST(RealizeHSystem, FirstGrowthStep) {
    const auto h = udg::HSystem::from_conditions(4, {{0, 1, 2}});
    const auto r = udg::realize_hsystem(h, {}, 0);
    EXPECT_EQ(r.k, 2);
    expect_on_unit_sphere(r);
    // Point 3 is rotated to the other side of the new coordinate.
    const double f = udg::FlatnessBudget{}.rotation(0);
    EXPECT_NEAR(r.points[0](2), std::sin(f), 1e-15);
    EXPECT_NEAR(r.points[3](2), -std::sin(f), 1e-15);
    EXPECT_TRUE(udg::violated_conditions(r.points, h).empty());
}

TEST(RealizeHSystem, NestedGrowthExample) {
    const auto h = udg::HSystem::from_conditions(5, {{0, 1, 2}, {0, 1, 2, 3}});
    const auto r = udg::realize_hsystem(h, {}, 3);
    const auto sizes = h.sizes();
    EXPECT_LE(r.k, udg::lemedge2_guarantee(sizes).k_realizable);
    EXPECT_TRUE(udg::violated_conditions(r.points, h).empty());
}

TEST(RealizeHSystem, RejectsFullConditions) {
    udg::HSystem h;
    h.m = 3;
    h.conditions = {{0, 1, 2}};
    EXPECT_THROW(udg::realize_hsystem(h, {}, 0), std::invalid_argument);
}

TEST(RealizeHSystem, RandomSystemsMeetConditionsAndBounds) {
    std::mt19937_64 rng(77);
    const udg::FlatnessBudget budget;
    for (int trial = 0; trial < 500; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 7);
        const auto h = random_hsystem(rng, m, static_cast<int>(rng() % 6));
        const auto r = udg::realize_hsystem(h, budget, static_cast<std::uint64_t>(trial));
        const auto sizes = h.sizes();
        const auto guarantee = udg::lemedge2_guarantee(sizes);
        ASSERT_EQ(r.k, guarantee.k_realizable);
        ASSERT_TRUE(udg::violated_conditions(r.points, h).empty()) << "trial " << trial;
        expect_on_unit_sphere(r);
        EXPECT_LT(udg::max_chord_tilt(r.points, r.pole), budget.eps);
        // Few condition elements keep the dimension low.
        const long sum = udg::edge_sum(h);
        for (int k = 1; k <= 8; ++k) {
            if (sum < udg::lemedge_bound(k)) {
                EXPECT_LE(r.k, k) << "trial " << trial;
            }
        }
        // Certified lower bound never exceeds the achieved dimension.
        EXPECT_LE(udg::k_lower_bound(h), r.k);
    }
}

TEST(RealizeHSystem, DeterministicInSeed) {
    const auto h = udg::HSystem::from_conditions(6, {{0, 1, 2}, {1, 2, 3, 4}, {0}});
    const auto a = udg::realize_hsystem(h, {}, 42);
    const auto b = udg::realize_hsystem(h, {}, 42);
    ASSERT_EQ(a.points.size(), b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        EXPECT_EQ(a.points[i], b.points[i]);
    }
}
