#include <gtest/gtest.h>

#include <cmath>

#include "udg/kernels.hpp"
#include "udg/rng.hpp"

namespace k = udg::kernels;

namespace {

std::vector<double> random_coords(udg::Rng& rng, std::size_t n, std::size_t dim) {
    std::vector<double> x(n * dim);
    for (auto& v : x) {
        v = udg::uniform(rng, -2.0, 2.0);
    }
    return x;
}

void random_edges(udg::Rng& rng, std::size_t n, std::size_t count, std::vector<std::int32_t>& eu,
                  std::vector<std::int32_t>& ev) {
    eu.clear();
    ev.clear();
    for (std::size_t e = 0; e < count; ++e) {
        const auto u = static_cast<std::int32_t>(rng() % n);
        auto v = static_cast<std::int32_t>(rng() % n);
        if (v == u) {
            v = static_cast<std::int32_t>((static_cast<std::size_t>(v) + 1) % n);
        }
        eu.push_back(u);
        ev.push_back(v);
    }
}

// Pairwise squared distances by the textbook formula.
double naive_sq(const std::vector<double>& x, std::size_t n, std::size_t dim, std::size_t i, std::size_t j) {
    double s = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
        const double d = x[c * n + i] - x[c * n + j];
        s += d * d;
    }
    return s;
}

}  // namespace

TEST(Kernels, ScalarPairwiseMatchesDefinition) {
    udg::Rng rng = udg::make_rng(1);
    for (std::size_t n : {1u, 2u, 5u, 9u}) {
        for (std::size_t dim : {1u, 3u, 4u}) {
            const auto x = random_coords(rng, n, dim);
            std::vector<double> out(n * n);
            k::scalar_table().pairwise_sq_dist(x.data(), n, dim, out.data());
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    EXPECT_NEAR(out[i * n + j], naive_sq(x, n, dim, i, j), 1e-12);
                }
            }
        }
    }
}

TEST(Kernels, ScalarObjectiveZeroOnUnitEdgesAndGradientZero) {
    // Unit square in SoA layout.
    const std::vector<double> x = {0, 1, 1, 0, 0, 0, 1, 1};
    const std::vector<std::int32_t> eu = {0, 1, 2, 0};
    const std::vector<std::int32_t> ev = {1, 2, 3, 3};
    std::vector<double> grad(8, 7.0);
    EXPECT_EQ(k::scalar_table().edge_objective(x.data(), 4, 2, eu.data(), ev.data(), 4, grad.data()), 0.0);
    for (double g : grad) {
        EXPECT_EQ(g, 0.0);
    }
}

TEST(Kernels, ActiveTableIsAvailable) {
    const auto& t = k::active();
    EXPECT_TRUE(k::available(t.isa));
    EXPECT_TRUE(k::available(k::Isa::scalar));
    EXPECT_NO_THROW(k::table(k::Isa::scalar));
}

class SimdEquivalence : public ::testing::Test {
protected:
    void SetUp() override {
        if (!k::available(k::Isa::avx2)) {
            GTEST_SKIP() << "AVX2 kernels not available on this build or CPU";
        }
    }
};

TEST_F(SimdEquivalence, PairwiseAllRemainders) {
    const auto& s = k::scalar_table();
    const auto& v = k::table(k::Isa::avx2);
    udg::Rng rng = udg::make_rng(2);
    for (std::size_t n = 1; n <= 19; ++n) {
        for (std::size_t dim = 1; dim <= 6; ++dim) {
            const auto x = random_coords(rng, n, dim);
            std::vector<double> a(n * n);
            std::vector<double> b(n * n);
            s.pairwise_sq_dist(x.data(), n, dim, a.data());
            v.pairwise_sq_dist(x.data(), n, dim, b.data());
            for (std::size_t i = 0; i < n * n; ++i) {
                EXPECT_NEAR(a[i], b[i], 1e-12 * std::max(1.0, std::abs(a[i]))) << "n=" << n << " dim=" << dim;
            }
        }
    }
}

TEST_F(SimdEquivalence, EdgeObjectiveAndGradientAllRemainders) {
    const auto& s = k::scalar_table();
    const auto& v = k::table(k::Isa::avx2);
    udg::Rng rng = udg::make_rng(3);
    std::vector<std::int32_t> eu;
    std::vector<std::int32_t> ev;
    for (std::size_t n = 2; n <= 12; ++n) {
        for (std::size_t dim = 1; dim <= 5; ++dim) {
            for (std::size_t m = 0; m <= 11; ++m) {
                const auto x = random_coords(rng, n, dim);
                random_edges(rng, n, m, eu, ev);
                std::vector<double> ga(n * dim);
                std::vector<double> gb(n * dim);
                const double fa = s.edge_objective(x.data(), n, dim, eu.data(), ev.data(), m, ga.data());
                const double fb = v.edge_objective(x.data(), n, dim, eu.data(), ev.data(), m, gb.data());
                EXPECT_NEAR(fa, fb, 1e-12 * std::max(1.0, fa));
                for (std::size_t i = 0; i < ga.size(); ++i) {
                    EXPECT_NEAR(ga[i], gb[i], 1e-11 * std::max(1.0, std::abs(ga[i])));
                }
                const double fc = v.edge_objective(x.data(), n, dim, eu.data(), ev.data(), m, nullptr);
                EXPECT_NEAR(fa, fc, 1e-12 * std::max(1.0, fa));
            }
        }
    }
}

TEST(Kernels, PairwiseDistancesHelper) {
    std::vector<udg::Point> pts(3, udg::Point::Zero(2));
    pts[1](0) = 3.0;
    pts[2](1) = 4.0;
    const auto d = k::pairwise_distances(pts);
    EXPECT_NEAR(d[0 * 3 + 1], 3.0, 1e-15);
    EXPECT_NEAR(d[1 * 3 + 2], 5.0, 1e-15);
    EXPECT_NEAR(d[2 * 3 + 0], 4.0, 1e-15);
}
