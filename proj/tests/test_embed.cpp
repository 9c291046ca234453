#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "udg/embed.hpp"
#include "udg/verify.hpp"

namespace {

udg::Graph from_instance(const oracle::BipartiteInstance& inst) {
    return udg::Graph(inst.n, inst.edges, inst.a_side);
}

void expect_faithful(const udg::Graph& g, const udg::Embedding& e) {
    const auto r = udg::verify(g, e, udg::Mode::faithful, 1e-7);
    EXPECT_TRUE(r.pass);
    EXPECT_GE(r.min_nonedge_gap, 1e-4);
    EXPECT_GT(r.min_pair_distance, 1e-6);
}

}  // namespace

TEST(EmbedColorable, TriangleInR6) {
    const auto k3 = udg::make_complete(3);
    const auto e = udg::embed_colorable(k3, {{0}, {1}, {2}});
    EXPECT_EQ(e.dim, 6);
    EXPECT_TRUE(udg::verify(k3, e, udg::Mode::distance, 1e-12).pass);
}

TEST(EmbedColorable, CrossCircleDistanceIsExactlyOne) {
    const udg::Graph g(2, {{0, 1}});
    const auto e = udg::embed_colorable(g, {{0}, {1}});
    EXPECT_DOUBLE_EQ((e.points[0] - e.points[1]).norm(), 1.0);
}

TEST(EmbedColorable, PetersenWithExactColoring) {
    const auto p = udg::make_petersen();
    const auto coloring = udg::exact_coloring_small(p);
    ASSERT_EQ(coloring.size(), 3u);
    const auto e = udg::embed_colorable(p, coloring);
    EXPECT_EQ(e.dim, 6);
    for (const auto& [u, v] : p.edges()) {
        EXPECT_NEAR((e.points[static_cast<std::size_t>(u)] - e.points[static_cast<std::size_t>(v)]).norm(), 1.0,
                    1e-9);
    }
    EXPECT_TRUE(e.is_valid());
}

TEST(EmbedColorable, RejectsImproperColoring) {
    const auto k3 = udg::make_complete(3);
    EXPECT_THROW(udg::embed_colorable(k3, {{0, 1}, {2}}), udg::PreconditionError);
    EXPECT_THROW(udg::embed_colorable(k3, {{0}, {1}}), udg::PreconditionError);
    EXPECT_THROW(udg::embed_colorable(k3, {{0}, {1}, {2}, {2}}), udg::PreconditionError);
}

TEST(EmbedSingleton, StarAndSingletonPairs) {
    // K_{1,4}: center singleton, leaves one class -> R^{1+2}.
    const udg::Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    const auto e = udg::embed_singleton_coloring(star, {{0}, {1, 2, 3, 4}});
    EXPECT_EQ(e.dim, 3);
    EXPECT_TRUE(udg::verify(star, e, udg::Mode::distance, 1e-12).pass);
    EXPECT_TRUE(e.is_valid());

    const auto k3 = udg::make_complete(3);
    const auto e3 = udg::embed_singleton_coloring(k3, {{0}, {1}, {2}});
    EXPECT_EQ(e3.dim, 3);
    EXPECT_TRUE(udg::verify(k3, e3, udg::Mode::distance, 1e-12).pass);
}

TEST(EmbedBipartite, SpecExamples) {
    // K_{3,3} minus a perfect matching in R^3.
    const udg::Graph c6(6, {{0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}}, std::vector<int>{0, 1, 2});
    expect_faithful(c6, udg::embed_bipartite_faithful(c6, 3, 0));

    const auto kp = udg::make_kprime(4);
    expect_faithful(kp, udg::embed_bipartite_faithful(kp, 5, 0));

    const udg::Graph k2(2, {{0, 1}});
    const auto e = udg::embed_bipartite_faithful(k2, 2, 0);
    EXPECT_NEAR((e.points[0] - e.points[1]).norm(), 1.0, 1e-9);
}

TEST(EmbedBipartite, Preconditions) {
    const auto kp = udg::make_kprime(4);
    try {
        udg::embed_bipartite_faithful(kp, 3, 0);
        FAIL() << "degree 4 > 3 must be rejected";
    } catch (const udg::PreconditionError& e) {
        EXPECT_FALSE(e.witnesses.empty());
    }
    // Three degree-d vertices with the same neighborhood.
    const auto k33 = udg::make_complete_multipartite(std::vector<int>{3, 3});
    try {
        udg::embed_bipartite_faithful(k33, 3, 0);
        FAIL() << "three twins of full degree must be rejected";
    } catch (const udg::PreconditionError& e) {
        EXPECT_EQ(e.witnesses.size(), 3u);
    }
    EXPECT_THROW(udg::embed_bipartite_faithful(udg::make_cycle(5), 3, 0), udg::PreconditionError);
    EXPECT_THROW(udg::embed_bipartite_faithful(udg::Graph(2, {{0, 1}}), 1, 0), udg::PreconditionError);
}

TEST(EmbedBipartite, TwinsUseBothPoints) {
    // Two A vertices of degree 3 sharing B = {2, 3, 4}, d = 3.
    const udg::Graph g(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}, std::vector<int>{0, 1});
    expect_faithful(g, udg::embed_bipartite_faithful(g, 3, 4));
}

TEST(EmbedBipartite, RandomInstancesAllDimensions) {
    std::mt19937_64 rng(2024);
    int count = 0;
    for (int d : {3, 4, 5}) {
        for (int trial = 0; trial < 34; ++trial, ++count) {
            const int na = 4 + static_cast<int>(rng() % 17);
            const int nb = d + static_cast<int>(rng() % static_cast<unsigned>(11 - d));
            const auto g = from_instance(oracle::random_bipartite(rng, na, nb, d));
            const auto e = udg::embed_bipartite_faithful(g, d, static_cast<std::uint64_t>(trial));
            expect_faithful(g, e);
            // The construction is deterministic in the seed.
            const auto again = udg::embed_bipartite_faithful(g, d, static_cast<std::uint64_t>(trial));
            for (std::size_t i = 0; i < e.points.size(); ++i) {
                EXPECT_EQ(e.points[i], again.points[i]);
            }
        }
    }
    EXPECT_EQ(count, 102);
}
