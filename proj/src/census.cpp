#include "udg/census.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "udg/errors.hpp"

namespace udg {

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

namespace {

int find_root(std::vector<int>& parent, int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
        parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        v = parent[static_cast<std::size_t>(v)];
    }
    return v;
}

BigInt pow2(unsigned e) { return BigInt(1) << e; }

}  // namespace

bool linear_forest_oracle(const Graph& g) {
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) > 2) {
            return false;
        }
    }
    std::vector<int> parent(static_cast<std::size_t>(g.n()));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& [u, v] : g.edges()) {
        const int ru = find_root(parent, u);
        const int rv = find_root(parent, v);
        if (ru == rv) {
            return false;
        }
        parent[static_cast<std::size_t>(ru)] = rv;
    }
    return true;
}

Embedding linear_forest_embedding(const Graph& g) {
    if (!linear_forest_oracle(g)) {
        throw PreconditionError("graph is not a disjoint union of paths");
    }
    // Component t starts at t (n + 1/2): distances across components are
    // either integers >= 2 or half-integers.
    Embedding e{1, std::vector<Point>(static_cast<std::size_t>(g.n()), Point::Zero(1))};
    std::vector<char> done(static_cast<std::size_t>(g.n()), 0);
    int component = 0;
    for (int start = 0; start < g.n(); ++start) {
        if (done[static_cast<std::size_t>(start)] || g.degree(start) == 2) {
            continue;
        }
        const double base = component * (g.n() + 0.5);
        int prev = -1;
        int v = start;
        for (int i = 0; v >= 0; ++i) {
            done[static_cast<std::size_t>(v)] = 1;
            e.points[static_cast<std::size_t>(v)](0) = base + i;
            int next = -1;
            for (const int w : g.neighbors(v)) {
                if (w != prev) {
                    next = w;
                }
            }
            prev = v;
            v = next;
        }
        ++component;
    }
    return e;
}

ZeroPatternBound zero_pattern_bound(int n, int d) {
    ZeroPatternBound out;
    if (n < 1 || d < 1) {
        out.reason = "needs n >= 1 and d >= 1";
        return out;
    }
    if (n < 2 * d) {
        out.reason = "needs n >= 2d";
        return out;
    }
    const long long vars = static_cast<long long>(n) * d;
    const long long pairs2 = static_cast<long long>(n) * (n - 1);
    if (vars > pairs2) {
        out.reason = "needs nd <= n(n-1)";
        return out;
    }
    out.value = binomial(static_cast<unsigned>(pairs2), static_cast<unsigned>(vars));
    const long long polys = pairs2 / 2;
    if (polys >= vars) {
        out.applicable = true;
        out.reason = "zero patterns of n(n-1)/2 quadratic polynomials in nd variables";
    } else if (out.value >= pow2(static_cast<unsigned>(polys))) {
        out.applicable = true;
        out.reason = "value is at least 2^{n(n-1)/2}, the number of all labelled graphs";
    } else {
        out.reason = "needs n(n-1)/2 >= nd";
    }
    return out;
}

bool ramsey_fd_inequality(long long m, int s, int d) {
    const auto e = static_cast<unsigned>(s * (s - 1) / 2);
    BigInt bound = pow2(e);
    const ZeroPatternBound zp = zero_pattern_bound(s, d);
    if (zp.applicable && zp.value < bound) {
        bound = zp.value;
    }
    return binomial(static_cast<unsigned>(m), static_cast<unsigned>(s)) * 2 * bound < pow2(e);
}

long long ramsey_fd_lower(int s, int d) {
    if (s < 2 || d < 1 || s < 2 * d) {
        throw PreconditionError("ramsey_fd_lower needs s >= 2, d >= 1 and s >= 2d");
    }
    // The left side grows with m, so the valid m form a prefix.
    long long lo = s - 1;  // C(s-1, s) = 0 always satisfies it
    long long hi = s;
    while (ramsey_fd_inequality(hi, s, d)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        const long long mid = lo + (hi - lo) / 2;
        (ramsey_fd_inequality(mid, s, d) ? lo : hi) = mid;
    }
    return lo;
}

std::vector<Graph::Edge> census_pairs(int n) {
    std::vector<Graph::Edge> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    return pairs;
}

Graph graph_from_mask(int n, std::uint32_t mask) {
    const auto pairs = census_pairs(n);
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask & (1U << i)) {
            edges.push_back(pairs[i]);
        }
    }
    return Graph(n, std::move(edges));
}

namespace {

std::uint32_t permuted_mask(int n, std::uint32_t mask, const std::vector<int>& perm) {
    std::uint32_t out = 0;
    int bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
            if (!(mask & (1U << bit))) {
                continue;
            }
            int a = perm[static_cast<std::size_t>(u)];
            int b = perm[static_cast<std::size_t>(v)];
            if (a > b) {
                std::swap(a, b);
            }
            // Index of pair (a, b) in lexicographic order.
            const int index = a * n - a * (a + 1) / 2 + (b - a - 1);
            out |= 1U << index;
        }
    }
    return out;
}

}  // namespace

std::uint32_t canonical_mask(int n, std::uint32_t mask) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = mask;
    do {
        best = std::min(best, permuted_mask(n, mask, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

struct ObstructionSearch {
    const Graph& g;
    int parts;
    std::vector<std::vector<int>> groups;

    bool fits(int v, std::size_t part) const {
        for (std::size_t q = 0; q < groups.size(); ++q) {
            if (q == part) {
                continue;
            }
            for (const int w : groups[q]) {
                if (!g.adjacent(v, w)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool complete() const {
        return static_cast<int>(groups.size()) == parts &&
               std::all_of(groups.begin(), groups.end(), [](const auto& grp) { return grp.size() == 3; });
    }

    bool run(int v) {
        if (complete()) {
            return true;
        }
        if (v >= g.n()) {
            return false;
        }
        std::size_t missing = 3 * static_cast<std::size_t>(parts);
        for (const auto& grp : groups) {
            missing -= grp.size();
        }
        if (missing > static_cast<std::size_t>(g.n() - v)) {
            return false;
        }
        for (std::size_t q = 0; q < groups.size(); ++q) {
            if (groups[q].size() < 3 && fits(v, q)) {
                groups[q].push_back(v);
                if (run(v + 1)) {
                    return true;
                }
                groups[q].pop_back();
            }
        }
        if (static_cast<int>(groups.size()) < parts && fits(v, groups.size())) {
            groups.push_back({v});
            if (run(v + 1)) {
                return true;
            }
            groups.pop_back();
        }
        return run(v + 1);
    }
};

bool exact_decidable(int d) { return d == 1; }

CensusReport run_census(int n, int d, Mode mode, const SolverConfig& cfg, const CensusOptions& options) {
    if (n < 1 || n > 5) {
        throw PreconditionError("census supports 1 <= n <= 5");
    }
    if (d < 1) {
        throw PreconditionError("census needs d >= 1");
    }
    cfg.validate();
    if (options.exact_only && !exact_decidable(d)) {
        throw PreconditionError("no exact oracle for d >= 2; rerun without the exact-only restriction");
    }
    CensusReport report;
    report.n = n;
    report.d = d;
    report.mode = mode;
    report.config = cfg;

    const auto pair_count = static_cast<unsigned>(n * (n - 1) / 2);
    const std::uint32_t total = 1U << pair_count;
    std::map<std::uint32_t, CensusEntry> decided;
    report.entries.reserve(total);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        const std::uint32_t rep = canonical_mask(n, mask);
        auto it = decided.find(rep);
        if (it == decided.end()) {
            CensusEntry c;
            c.mask = rep;
            c.representative = rep;
            const Graph g = graph_from_mask(n, rep);
            if (exact_decidable(d)) {
                c.realizable = linear_forest_oracle(g);
                c.method = Method::exact_oracle;
            } else if (mode == Mode::distance && contains_distance_obstruction(g, d)) {
                c.realizable = false;
                c.method = Method::exact_oracle;
            } else {
                const SolveResult r = solve(g, d, mode, cfg);
                c.realizable = r.status == SolveStatus::found;
                c.method = c.realizable ? Method::solver_found : Method::solver_exhausted;
                c.residual = r.best_residual;
            }
            it = decided.emplace(rep, c).first;
        }
        CensusEntry entry = it->second;
        entry.mask = mask;
        if (options.cross_check && entry.method == Method::exact_oracle) {
            entry.cross_check = solve(graph_from_mask(n, mask), d, mode, cfg).status == SolveStatus::found;
        }
        (entry.realizable ? report.count_realizable : report.count_presumed_not) += 1;
        report.entries.push_back(entry);
    }
    report.classes = static_cast<int>(decided.size());
    report.exact = std::all_of(report.entries.begin(), report.entries.end(),
                               [](const CensusEntry& e) { return e.method == Method::exact_oracle; });
    return report;
}

}  // namespace

bool contains_distance_obstruction(const Graph& g, int d) {
    // One part of size 3 is an independent triple, which the line realizes.
    if (d < 2) {
        return false;
    }
    ObstructionSearch search{g, d / 2 + 1, {}};
    return search.run(0);
}

CensusReport count_faithful(int n, int d, const SolverConfig& cfg, const CensusOptions& options) {
    return run_census(n, d, Mode::faithful, cfg, options);
}

CensusReport count_distance(int n, int d, const SolverConfig& cfg, const CensusOptions& options) {
    return run_census(n, d, Mode::distance, cfg, options);
}

namespace {

// Planar faithful realizations of every graph on at most three vertices,
// found by trying each labelling of a small set of templates.
std::optional<Embedding> small_planar_construction(const Graph& g) {
    const double h = std::sqrt(3.0) / 2.0;
    const std::vector<std::vector<std::pair<double, double>>> templates = {
        {{0, 0}, {2, 0}, {4, 0}}, {{0, 0}, {1, 0}, {3, 0}}, {{0, 0}, {1, 0}, {2, 0}}, {{0, 0}, {1, 0}, {0.5, h}}};
    std::vector<int> perm(static_cast<std::size_t>(g.n()));
    for (const auto& t : templates) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            Embedding e{2, {}};
            for (int v = 0; v < g.n(); ++v) {
                const auto& [x, y] = t[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
                e.points.push_back(Eigen::Vector2d(x, y));
            }
            if (verify(g, e, Mode::faithful, 1e-9).pass) {
                return e;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return std::nullopt;
}

}  // namespace

std::optional<int> ramsey_exact(int s, int d, int max_m, const SolverConfig& cfg) {
    if (s < 2 || s > 3 || max_m > 8 || d < 1) {
        throw PreconditionError("ramsey_exact supports 2 <= s <= 3, max_m <= 8, d >= 1");
    }
    std::map<std::uint32_t, bool> cache;
    auto realizable = [&](const Graph& sub) {
        std::uint32_t key = 0;
        const auto pairs = census_pairs(sub.n());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (sub.adjacent(pairs[i].first, pairs[i].second)) {
                key |= 1U << i;
            }
        }
        auto it = cache.find(key);
        if (it != cache.end()) {
            return it->second;
        }
        bool ok = false;
        if (d == 1) {
            ok = linear_forest_oracle(sub);
        } else if (small_planar_construction(sub)) {
            ok = true;
        } else {
            ok = solve_faithful(sub, d, cfg).status == SolveStatus::found;
        }
        cache.emplace(key, ok);
        return ok;
    };

    for (int m = s; m <= max_m; ++m) {
        const auto pair_count = static_cast<unsigned>(m * (m - 1) / 2);
        const std::uint64_t total = 1ULL << pair_count;
        bool all = true;
        for (std::uint64_t mask = 0; mask < total && all; ++mask) {
            const Graph g = graph_from_mask(m, static_cast<std::uint32_t>(mask));
            const Graph gc = g.complement();
            bool hit = false;
            std::vector<int> subset(static_cast<std::size_t>(s));
            std::iota(subset.begin(), subset.end(), 0);
            for (;;) {
                if (realizable(g.induced(subset)) || realizable(gc.induced(subset))) {
                    hit = true;
                    break;
                }
                // Next s-subset of {0..m-1} in lexicographic order.
                int i = s - 1;
                while (i >= 0 && subset[static_cast<std::size_t>(i)] == m - s + i) {
                    --i;
                }
                if (i < 0) {
                    break;
                }
                ++subset[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < s; ++j) {
                    subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
                }
            }
            all = hit;
        }
        if (all) {
            return m;
        }
    }
    return std::nullopt;
}

const char* to_string(Method method) {
    switch (method) {
    case Method::exact_oracle:
        return "EXACT_ORACLE";
    case Method::solver_found:
        return "SOLVER_FOUND";
    case Method::solver_exhausted:
        return "SOLVER_EXHAUSTED";
    }
    return "SOLVER_EXHAUSTED";
}

}  // namespace udg
