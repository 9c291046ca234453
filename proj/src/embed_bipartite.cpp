#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "placement.hpp"
#include "udg/embed.hpp"
#include "udg/rng.hpp"
#include "udg/verify.hpp"

namespace udg {

std::vector<int> check_bipartite_faithful_preconditions(const Graph& g, int d) {
    if (d < 2) {
        throw PreconditionError("bipartite faithful embedding needs d >= 2");
    }
    const auto side = two_coloring(g);
    if (!side) {
        throw PreconditionError("graph is not bipartite");
    }
    std::vector<int> a_side = g.bipartition() ? *g.bipartition() : *side;
    std::map<std::vector<int>, std::vector<int>> full_groups;
    for (const int a : a_side) {
        const int deg = g.degree(a);
        if (deg > d) {
            throw PreconditionError("A-side vertex " + std::to_string(a) + " has degree " + std::to_string(deg) +
                                        " > " + std::to_string(d),
                                    {a});
        }
        if (deg == d) {
            auto& group = full_groups[g.neighbors(a)];
            group.push_back(a);
            if (group.size() >= 3) {
                throw PreconditionError("three A-side vertices of degree d share one neighborhood", group);
            }
        }
    }
    return a_side;
}

Embedding embed_bipartite_faithful(const Graph& g, int d, std::uint64_t seed, const BipartiteEmbedOptions& options) {
    const std::vector<int> a_side = check_bipartite_faithful_preconditions(g, d);
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<char> in_a(n, 0);
    for (const int a : a_side) {
        in_a[static_cast<std::size_t>(a)] = 1;
    }
    const double max_radius = std::numbers::sqrt2 / 2.0;

    detail::PlacementParams params;
    params.tol_construct = options.tol_construct;
    params.margin_nonedge = options.margin_nonedge;
    params.min_separation = options.tol_distinct;
    params.max_candidates = options.max_candidates;

    std::vector<int> full;
    std::vector<int> rest;
    for (const int a : a_side) {
        (g.degree(a) == d ? full : rest).push_back(a);
    }

    for (int attempt = 0; attempt < options.max_retries; ++attempt) {
        Rng rng = make_rng(seed, static_cast<std::uint64_t>(attempt));
        detail::Positions pos(n);
        for (std::size_t v = 0; v < n; ++v) {
            if (!in_a[v]) {
                pos[v] = random_in_ball(rng, d, options.b_diameter / 2.0);
            }
        }

        // Neighborhoods must be affinely independent with circumradius in
        // the admissible window.
        bool ok = true;
        std::vector<std::optional<Sphere>> spheres(n);
        for (const int a : a_side) {
            const auto nbrs = g.neighbors(a);
            if (nbrs.empty()) {
                continue;
            }
            std::vector<Point> pts;
            for (const int b : nbrs) {
                pts.push_back(*pos[static_cast<std::size_t>(b)]);
            }
            if (affine_rank(pts) != static_cast<int>(pts.size()) - 1) {
                ok = false;
                break;
            }
            Sphere s = circumsphere(pts);
            if (s.radius >= max_radius || std::abs(s.radius - 0.5) < options.radius_gap) {
                ok = false;
                break;
            }
            spheres[static_cast<std::size_t>(a)] = std::move(s);
        }
        if (!ok) {
            continue;
        }

        // Degree-d vertices take the two points of their complementary
        // 0-sphere; twins get one each, in vertex order.
        std::map<std::vector<int>, int> used;
        for (const int a : full) {
            const Sphere target = complementary_sphere(*spheres[static_cast<std::size_t>(a)], d);
            const int k = used[g.neighbors(a)]++;
            const Point p = target.point_at(Eigen::VectorXd::Constant(1, k == 0 ? 1.0 : -1.0));
            if (!detail::candidate_ok(g, a, p, pos, params)) {
                ok = false;
                break;
            }
            pos[static_cast<std::size_t>(a)] = p;
        }
        if (!ok) {
            continue;
        }
        // No fixed point may fall on another vertex's neighborhood sphere.
        for (const int a : full) {
            for (const int other : a_side) {
                const auto& s = spheres[static_cast<std::size_t>(other)];
                if (other != a && s && s->contains(*pos[static_cast<std::size_t>(a)], options.tol_distinct)) {
                    ok = false;
                }
            }
        }
        if (!ok || !detail::place_on_complementary_spheres(g, rest, pos, d, rng, params)) {
            continue;
        }

        Embedding e = detail::collect(pos, d);
        const VerifyReport report = verify(g, e, Mode::faithful, options.tol_construct);
        if (report.pass && report.min_nonedge_gap >= options.margin_nonedge &&
            report.min_pair_distance >= options.tol_distinct) {
            return e;
        }
    }
    throw ConstructionFailure("bipartite faithful embedding failed after " + std::to_string(options.max_retries) +
                              " reseedings");
}

}  // namespace udg
