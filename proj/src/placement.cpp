#include "placement.hpp"

#include <cmath>
#include <stdexcept>

namespace udg::detail {

bool candidate_ok(const Graph& g, int v, const Point& candidate, const Positions& pos, const PlacementParams& params) {
    for (int w = 0; w < g.n(); ++w) {
        if (w == v || !pos[static_cast<std::size_t>(w)]) {
            continue;
        }
        const double dist = (candidate - *pos[static_cast<std::size_t>(w)]).norm();
        if (dist < params.min_separation) {
            return false;
        }
        const double gap = std::abs(dist - 1.0);
        if (g.adjacent(v, w) ? gap > params.tol_construct : gap < params.margin_nonedge) {
            return false;
        }
    }
    return true;
}

bool place_on_complementary_spheres(const Graph& g, std::span<const int> order, Positions& pos, int dim, Rng& rng,
                                    const PlacementParams& params) {
    for (const int v : order) {
        std::vector<Point> nbrs;
        for (const int w : g.neighbors(v)) {
            if (!pos[static_cast<std::size_t>(w)]) {
                throw std::logic_error("neighbor placed after its A-side vertex");
            }
            nbrs.push_back(*pos[static_cast<std::size_t>(w)]);
        }
        std::optional<Sphere> target;
        if (!nbrs.empty()) {
            const Sphere s = minimal_sphere(nbrs);
            if (s.radius >= 1.0 || s.dimension() > dim - 2) {
                return false;
            }
            target = complementary_sphere(s, dim);
        }
        bool placed = false;
        for (int attempt = 0; attempt < params.max_candidates && !placed; ++attempt) {
            const Point candidate = target ? target->point_at(random_unit_vector(rng, target->flat.dimension()))
                                           : Point(random_in_ball(rng, dim, params.isolated_radius));
            if (candidate_ok(g, v, candidate, pos, params)) {
                pos[static_cast<std::size_t>(v)] = candidate;
                placed = true;
            }
        }
        if (!placed) {
            return false;
        }
    }
    return true;
}

Embedding collect(const Positions& pos, int dim) {
    Embedding e{dim, {}};
    e.points.reserve(pos.size());
    for (const auto& p : pos) {
        if (!p) {
            throw std::logic_error("unplaced vertex");
        }
        e.points.push_back(*p);
    }
    return e;
}

}  // namespace udg::detail
