#include "udg/audit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "placement.hpp"
#include "udg/census.hpp"
#include "udg/embed.hpp"
#include "udg/errors.hpp"
#include "udg/rng.hpp"
#include "udg/verify.hpp"

namespace udg {

BipartiteHSystem hsystem_of(const Graph& g, Side side) {
    const std::vector<int> a = bipartition_or_compute(g);
    std::vector<char> in_a(static_cast<std::size_t>(g.n()), 0);
    for (const int v : a) {
        in_a[static_cast<std::size_t>(v)] = 1;
    }
    const char mine = side == Side::a ? 1 : 0;
    BipartiteHSystem out;
    out.side = side;
    std::vector<int> index(static_cast<std::size_t>(g.n()), -1);
    std::vector<int> members;
    for (int v = 0; v < g.n(); ++v) {
        if (in_a[static_cast<std::size_t>(v)] == mine) {
            members.push_back(v);
        } else {
            index[static_cast<std::size_t>(v)] = static_cast<int>(out.ground.size());
            out.ground.push_back(v);
        }
    }
    const int m = static_cast<int>(out.ground.size());
    std::vector<std::pair<std::vector<int>, int>> conds;
    for (const int v : members) {
        std::vector<int> cond;
        for (const int w : g.neighbors(v)) {
            cond.push_back(index[static_cast<std::size_t>(w)]);
        }
        if (m > 0 && static_cast<int>(cond.size()) == m) {
            out.full_vertices.push_back(v);
        } else {
            conds.emplace_back(std::move(cond), v);
        }
    }
    std::stable_sort(conds.begin(), conds.end(),
                     [](const auto& x, const auto& y) { return x.first.size() < y.first.size(); });
    out.system.m = m;
    out.system.s = static_cast<int>(out.full_vertices.size());
    for (auto& [cond, v] : conds) {
        out.system.conditions.push_back(std::move(cond));
        out.condition_vertex.push_back(v);
    }
    return out;
}

int lemedge_bound(int k) {
    if (k < 1) {
        throw std::invalid_argument("lemedge_bound: k must be >= 1");
    }
    return (k + 3) * (k + 2) / 2 - 3;
}

SphereGuarantee lemedge2_guarantee(std::span<const int> sizes) {
    SphereGuarantee out;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i > 0 && sizes[i] < sizes[i - 1]) {
            throw std::invalid_argument("lemedge2_guarantee: sizes must be nondecreasing");
        }
        if (sizes[i] >= out.s + 3) {
            ++out.s;
            out.indices.push_back(static_cast<int>(i));
        }
    }
    out.k_realizable = out.s + 1;
    return out;
}

long edge_sum(const HSystem& h) {
    long total = static_cast<long>(h.s) * h.m;
    for (const auto& c : h.conditions) {
        total += static_cast<long>(c.size());
    }
    return total;
}

namespace {

struct ChainSearch {
    ChainSearch(const HSystem& h_, long budget_) : h(h_), budget(budget_) {}

    const HSystem& h;
    long budget;
    long nodes = 0;
    std::vector<int> chain;
    std::vector<int> best;
    std::vector<char> in_chain;
    std::unordered_set<std::string> seen;
    std::size_t ceiling = 0;

    bool extends(int j) const {
        if (chain.size() < 3) {
            return true;
        }
        for (const auto& cond : h.conditions) {
            if (std::binary_search(cond.begin(), cond.end(), j)) {
                continue;
            }
            const bool covers = std::all_of(chain.begin(), chain.end(), [&](int c) {
                return std::binary_search(cond.begin(), cond.end(), c);
            });
            if (covers) {
                return true;
            }
        }
        return false;
    }

    void dfs() {
        if (chain.size() > best.size()) {
            best = chain;
        }
        if (best.size() >= ceiling || nodes >= budget) {
            return;
        }
        const std::string key(in_chain.begin(), in_chain.end());
        if (!seen.insert(key).second) {
            return;
        }
        ++nodes;
        for (int j = 0; j < h.m; ++j) {
            if (in_chain[static_cast<std::size_t>(j)] || !extends(j)) {
                continue;
            }
            chain.push_back(j);
            in_chain[static_cast<std::size_t>(j)] = 1;
            dfs();
            in_chain[static_cast<std::size_t>(j)] = 0;
            chain.pop_back();
            if (best.size() >= ceiling || nodes >= budget) {
                return;
            }
        }
    }
};

}  // namespace

ChainBound k_lower_chain(const HSystem& h, long node_budget) {
    ChainSearch search(h, node_budget);
    search.in_chain.assign(static_cast<std::size_t>(h.m), 0);
    // Beyond three elements the chain stays inside one condition plus the
    // element it excludes.
    std::size_t largest = 0;
    for (const auto& c : h.conditions) {
        largest = std::max(largest, c.size());
    }
    search.ceiling = std::min<std::size_t>(static_cast<std::size_t>(h.m), std::max<std::size_t>(3, largest + 1));
    search.dfs();

    ChainBound out;
    out.chain = search.best;
    out.nodes = search.nodes;
    out.budget_exhausted = search.nodes >= node_budget;
    const int c = static_cast<int>(out.chain.size());
    out.k_lower = std::max(-1, c - 2);
    if (h.m >= 3) {
        out.rules.push_back({"three_distinct_points_on_sphere", {{"m", h.m}, {"k_lower", 1}}});
    }
    if (c > 3) {
        out.rules.push_back(
            {"independence_chain", {{"chain", out.chain}, {"length", c}, {"k_lower", c - 2}, {"nodes", out.nodes}}});
    }
    return out;
}

int k_lower_bound(const HSystem& h) { return k_lower_chain(h).k_lower; }

namespace {

// Offset between the sphere dimension of B and the ambient dimension forced
// by s vertices adjacent to all of B; 0 when no sphere is forced.
int lower_offset(int s) { return s >= 3 ? 3 : s; }

struct SideAnalysis {
    BipartiteHSystem hs;
    ChainBound chain;
    SphereGuarantee guarantee;
    int required = 0;
};

SideAnalysis analyze(const Graph& g, Side side) {
    SideAnalysis out{hsystem_of(g, side), {}, {}, 0};
    const auto sizes = out.hs.system.sizes();
    out.guarantee = lemedge2_guarantee(sizes);
    out.chain = k_lower_chain(out.hs.system);
    const int offset = lower_offset(out.hs.system.s);
    if (out.hs.system.m > 0 && offset > 0) {
        out.required = out.chain.k_lower + offset;
    }
    // Chain elements are reported as graph vertices.
    for (auto& rule : out.chain.rules) {
        if (rule.params.contains("chain")) {
            std::vector<int> vertices;
            for (const int j : out.chain.chain) {
                vertices.push_back(out.hs.ground[static_cast<std::size_t>(j)]);
            }
            rule.params["chain"] = vertices;
        }
    }
    return out;
}

bool accept(const Graph& g, const Embedding& e) {
    const VerifyReport r = verify(g, e, Mode::faithful, 1e-7);
    return r.pass && r.min_nonedge_gap >= 1e-4 && r.min_pair_distance >= kTolDistinct;
}

Embedding spread_on_line(const Graph& g, int d) {
    Embedding e{d, {}};
    for (int v = 0; v < g.n(); ++v) {
        Point p = Point::Zero(d);
        p(0) = 2.0 * v;
        e.points.push_back(std::move(p));
    }
    return e;
}

}  // namespace

std::optional<Embedding> embed_via_hsystem(const Graph& g, Side side, int d, std::uint64_t seed, int max_retries) {
    const BipartiteHSystem hs = hsystem_of(g, side);
    const int s = hs.system.s;
    const int k = lemedge2_guarantee(hs.system.sizes()).k_realizable;
    const int offset = s >= 3 ? 3 : (s == 2 ? 2 : 1);
    if (hs.system.m == 0 || d < k + offset) {
        return std::nullopt;
    }
    const double radius = s >= 3 ? 0.5 : (s == 2 ? 0.4 : 1.0);
    const FlatnessBudget budget{0.4};

    detail::PlacementParams params;
    std::vector<int> partial = hs.condition_vertex;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        HSystemRealization real;
        try {
            real = realize_hsystem(hs.system, budget, derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        } catch (const ConstructionFailure&) {
            continue;
        }
        Rng rng = make_rng(seed, 1000003ULL + static_cast<std::uint64_t>(attempt));
        detail::Positions pos(static_cast<std::size_t>(g.n()));
        for (std::size_t j = 0; j < hs.ground.size(); ++j) {
            pos[static_cast<std::size_t>(hs.ground[j])] = embed_in(radius * real.points[j], d);
        }
        bool ok = true;
        if (s == 1) {
            const Point center = Point::Zero(d);
            ok = detail::candidate_ok(g, hs.full_vertices[0], center, pos, params);
            pos[static_cast<std::size_t>(hs.full_vertices[0])] = center;
        } else if (s >= 2) {
            ok = detail::place_on_complementary_spheres(g, hs.full_vertices, pos, d, rng, params);
        }
        if (ok && detail::place_on_complementary_spheres(g, partial, pos, d, rng, params)) {
            Embedding e = detail::collect(pos, d);
            if (accept(g, e)) {
                return e;
            }
        }
    }
    return std::nullopt;
}

AuditReport faithful_dim_audit(const Graph& input, int d, const AuditOptions& options) {
    if (d < 1) {
        throw std::invalid_argument("audit: dimension must be >= 1");
    }
    const Graph g = input.with_bipartition(bipartition_or_compute(input));
    AuditReport report;
    report.graph_id = graph_id(input);
    report.d_queried = d;

    const SideAnalysis sa = analyze(g, Side::a);
    const SideAnalysis sb = analyze(g, Side::b);
    const SideAnalysis& best = sb.required > sa.required ? sb : sa;
    report.side = best.hs.side;
    report.k_lower = best.chain.k_lower;
    report.k_upper = best.guarantee.k_realizable;
    report.s = best.hs.system.s;
    report.required_dim = best.required;
    report.rule_chain = best.chain.rules;
    if (best.required > 0) {
        report.rule_chain.push_back({"full_vertex_offset",
                                     {{"side", to_string(best.hs.side)},
                                      {"s", best.hs.system.s},
                                      {"offset", lower_offset(best.hs.system.s)},
                                      {"required_dim", best.required}}});
    }

    if (d == 1) {
        if (linear_forest_oracle(g)) {
            report.rule_chain.push_back({"linear_forest_on_line", {{"dim", 1}}});
            report.witness = linear_forest_embedding(g);
            report.verdict = Verdict::realizable;
        } else {
            report.rule_chain.push_back({"not_a_linear_forest", {{"dim", 1}}});
            report.verdict = Verdict::not_realizable;
        }
        return report;
    }
    if (d < best.required) {
        report.verdict = Verdict::not_realizable;
        return report;
    }

    auto found = [&](std::string rule, nlohmann::json params, Embedding e) {
        report.rule_chain.push_back({std::move(rule), std::move(params)});
        report.witness = std::move(e);
        report.verdict = Verdict::realizable;
        return report;
    };

    if (g.edge_count() == 0) {
        return found("edgeless_spread", {{"dim", d}}, spread_on_line(g, d));
    }
    // Complementary-sphere construction with either side as A.
    for (const Side side : {Side::a, Side::b}) {
        const Graph oriented = side == Side::a ? g : g.with_bipartition(g.b_side());
        try {
            check_bipartite_faithful_preconditions(oriented, d);
        } catch (const PreconditionError&) {
            continue;
        }
        try {
            BipartiteEmbedOptions embed_options;
            embed_options.max_retries = options.max_retries;
            Embedding e = embed_bipartite_faithful(oriented, d, options.seed, embed_options);
            if (accept(g, e)) {
                return found("bipartite_complementary_spheres", {{"a_side", to_string(side)}, {"dim", d}},
                             std::move(e));
            }
        } catch (const ConstructionFailure&) {
        }
    }
    for (const SideAnalysis* sd : {&sa, &sb}) {
        auto e = embed_via_hsystem(g, sd->hs.side, d, options.seed, options.max_retries);
        if (e) {
            return found("hsystem_placement",
                         {{"side", to_string(sd->hs.side)}, {"k", sd->guarantee.k_realizable}, {"s", sd->hs.system.s}},
                         std::move(*e));
        }
    }
    if (options.numeric_fallback) {
        SolverConfig cfg = options.solver;
        cfg.seed = options.seed;
        SolveResult r = solve_faithful(g, d, cfg);
        if (r.status == SolveStatus::found && accept(g, *r.embedding)) {
            return found("numeric_solver", {{"restarts_used", r.restarts_used}}, std::move(*r.embedding));
        }
    }
    report.verdict = Verdict::undecided;
    return report;
}

const char* to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::not_realizable:
        return "NOT_REALIZABLE";
    case Verdict::realizable:
        return "REALIZABLE";
    case Verdict::undecided:
        return "UNDECIDED";
    }
    return "UNDECIDED";
}

const char* to_string(Side side) { return side == Side::a ? "A" : "B"; }

}  // namespace udg
