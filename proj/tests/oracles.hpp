#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's algorithms; values are obtained by brute force, closed forms or
// plain hand-written arithmetic.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Coords = std::vector<std::vector<double>>;
using EdgeList = std::vector<std::pair<int, int>>;

inline double dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += (a[i] - b[i]) * (a[i] - b[i]);
    }
    return std::sqrt(s);
}

/// Circumradius of affinely independent points by Gaussian elimination on
/// the system 2 (p_i - p_0) . (c - p_0) = |p_i - p_0|^2 with c - p_0 in the
/// span of the differences.
inline double circumradius(const Coords& pts) {
    const std::size_t k = pts.size() - 1;
    const std::size_t dim = pts[0].size();
    std::vector<std::vector<double>> diff(k, std::vector<double>(dim));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t c = 0; c < dim; ++c) {
            diff[i][c] = pts[i + 1][c] - pts[0][c];
        }
    }
    // Unknowns lambda: c - p_0 = sum_j lambda_j diff_j.
    std::vector<std::vector<double>> a(k, std::vector<double>(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
        double sq = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            double dot = 0.0;
            for (std::size_t c = 0; c < dim; ++c) {
                dot += diff[i][c] * diff[j][c];
            }
            a[i][j] = 2.0 * dot;
        }
        for (std::size_t c = 0; c < dim; ++c) {
            sq += diff[i][c] * diff[i][c];
        }
        a[i][k] = sq;
    }
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) {
                piv = r;
            }
        }
        std::swap(a[col], a[piv]);
        for (std::size_t r = 0; r < k; ++r) {
            if (r != col) {
                const double f = a[r][col] / a[col][col];
                for (std::size_t c = col; c <= k; ++c) {
                    a[r][c] -= f * a[col][c];
                }
            }
        }
    }
    std::vector<double> center(pts[0]);
    for (std::size_t j = 0; j < k; ++j) {
        const double lambda = a[j][k] / a[j][j];
        for (std::size_t c = 0; c < dim; ++c) {
            center[c] += lambda * diff[j][c];
        }
    }
    return dist(center, pts[0]);
}

/// Chromatic number by trying every assignment of k colors, k = 1, 2, ...
inline int chromatic_number(int n, const EdgeList& edges) {
    for (int k = 1; k <= n; ++k) {
        std::vector<int> col(static_cast<std::size_t>(n), 0);
        for (;;) {
            bool ok = true;
            for (const auto& [u, v] : edges) {
                if (col[static_cast<std::size_t>(u)] == col[static_cast<std::size_t>(v)]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                return k;
            }
            int i = 0;
            while (i < n && ++col[static_cast<std::size_t>(i)] == k) {
                col[static_cast<std::size_t>(i)] = 0;
                ++i;
            }
            if (i == n) {
                break;
            }
        }
    }
    return n;
}

/// Whether the cycle C_n has a distance realization on the line: each step
/// is +1 or -1, the walk closes, and all positions are distinct.
inline bool cycle_on_line(int n) {
    for (std::uint32_t signs = 0; signs < (1U << n); ++signs) {
        std::vector<int> pos{0};
        for (int i = 0; i < n - 1; ++i) {
            pos.push_back(pos.back() + ((signs >> i) & 1U ? 1 : -1));
        }
        const int last = pos.back() + ((signs >> (n - 1)) & 1U ? 1 : -1);
        std::set<int> distinct(pos.begin(), pos.end());
        if (last == 0 && static_cast<int>(distinct.size()) == n) {
            return true;
        }
    }
    return false;
}

/// Labelled linear forests on n vertices: a(n) = sum_k C(n-1, k-1) p(k)
/// a(n-k), p(1) = 1, p(k) = k!/2 labelled paths on k vertices.
inline long long linear_forest_count(int n) {
    std::vector<long long> a(static_cast<std::size_t>(n + 1), 0);
    a[0] = 1;
    auto choose = [](int nn, int kk) {
        long long r = 1;
        for (int i = 1; i <= kk; ++i) {
            r = r * (nn - kk + i) / i;
        }
        return r;
    };
    auto paths = [](int k) {
        long long f = 1;
        for (int i = 2; i <= k; ++i) {
            f *= i;
        }
        return k == 1 ? 1LL : f / 2;
    };
    for (int m = 1; m <= n; ++m) {
        for (int k = 1; k <= m; ++k) {
            a[static_cast<std::size_t>(m)] += choose(m - 1, k - 1) * paths(k) * a[static_cast<std::size_t>(m - k)];
        }
    }
    return a[static_cast<std::size_t>(n)];
}

/// Pascal's triangle in 64-bit integers (exact up to row 62).
inline std::uint64_t pascal(int n, int k) {
    std::vector<std::vector<std::uint64_t>> t(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        t[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i + 1), 1);
        for (int j = 1; j < i; ++j) {
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
        }
    }
    return k < 0 || k > n ? 0 : t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// Planar point sets whose unit-distance graphs cover every isomorphism
/// class on `n` vertices that is faithful in the plane (n = 3 or 4). K_4 is
/// the only 4-vertex class missing: four points pairwise at distance 1 span
/// R^3.
inline std::vector<Coords> planar_templates(int n) {
    const double h = std::sqrt(3.0) / 2.0;
    if (n == 3) {
        return {{{0, 0}, {2, 0}, {4, 0}},
                {{0, 0}, {1, 0}, {3, 0}},
                {{0, 0}, {1, 0}, {2, 0}},
                {{0, 0}, {1, 0}, {0.5, h}}};
    }
    const double a1 = 100.0 * M_PI / 180.0;
    const double a2 = 200.0 * M_PI / 180.0;
    return {
        {{0, 0}, {3, 0}, {6, 0}, {9, 0}},                               // empty
        {{0, 0}, {1, 0}, {3, 0}, {6, 0}},                               // one edge
        {{0, 0}, {1, 0}, {2, 0}, {5, 0}},                               // P3 + K1
        {{0, 0}, {1, 0}, {3, 0}, {4, 0}},                               // 2 K2
        {{0, 0}, {1, 0}, {0.5, h}, {4, 0}},                             // K3 + K1
        {{0, 0}, {1, 0}, {2, 0}, {3, 0}},                               // P4
        {{0, 0}, {1, 0}, {std::cos(a1), std::sin(a1)}, {std::cos(a2), std::sin(a2)}},  // star
        {{0, 0}, {1, 0}, {1, 1}, {0, 1}},                               // C4
        {{0, 0}, {1, 0}, {0.5, h}, {-1, 0}},                            // paw
        {{0, 0}, {1, 0}, {0.5, h}, {0.5, -h}},                          // diamond
    };
}

/// Edge set (as a bitmask over lexicographic pairs) of the unit-distance
/// graph of `pts`, or -1 when some pair is ambiguous.
inline long long unit_mask(const Coords& pts, double tol = 1e-9) {
    long long mask = 0;
    int bit = 0;
    for (std::size_t u = 0; u < pts.size(); ++u) {
        for (std::size_t v = u + 1; v < pts.size(); ++v, ++bit) {
            const double g = std::abs(dist(pts[u], pts[v]) - 1.0);
            if (g <= tol) {
                mask |= 1LL << bit;
            } else if (g < 1e-3) {
                return -1;
            }
        }
    }
    return mask;
}

/// Masks of all labelled graphs on n vertices reachable by relabelling some
/// template.
inline std::set<long long> planar_faithful_masks(int n) {
    std::set<long long> out;
    for (const auto& t : planar_templates(n)) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            Coords p;
            for (int v = 0; v < n; ++v) {
                p.push_back(t[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])]);
            }
            out.insert(unit_mask(p));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

struct BipartiteInstance {
    int n = 0;
    EdgeList edges;
    std::vector<int> a_side;
};

/// Random bipartite graph with |A| = na (vertices 0..na-1), |B| = nb, A-side
/// degrees uniform in [0, max_deg], rejecting draws where three vertices of
/// degree max_deg share a neighborhood.
inline BipartiteInstance random_bipartite(std::mt19937_64& rng, int na, int nb, int max_deg) {
    for (;;) {
        BipartiteInstance inst;
        inst.n = na + nb;
        std::vector<std::vector<int>> full;
        for (int a = 0; a < na; ++a) {
            inst.a_side.push_back(a);
            const int deg = std::uniform_int_distribution<int>(0, max_deg)(rng);
            std::vector<int> b(static_cast<std::size_t>(nb));
            std::iota(b.begin(), b.end(), na);
            std::shuffle(b.begin(), b.end(), rng);
            b.resize(static_cast<std::size_t>(deg));
            std::sort(b.begin(), b.end());
            if (deg == max_deg) {
                full.push_back(b);
            }
            for (const int v : b) {
                inst.edges.emplace_back(a, v);
            }
        }
        bool ok = true;
        for (const auto& f : full) {
            if (std::count(full.begin(), full.end(), f) >= 3) {
                ok = false;
            }
        }
        if (ok) {
            std::sort(inst.edges.begin(), inst.edges.end());
            return inst;
        }
    }
}

}  // namespace oracle
