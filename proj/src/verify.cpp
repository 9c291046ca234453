#include "udg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "udg/kernels.hpp"

namespace udg {

bool Embedding::is_valid(double min_separation) const {
    for (const auto& p : points) {
        if (p.size() != dim || !p.allFinite()) {
            return false;
        }
    }
    if (points.size() < 2) {
        return true;
    }
    const auto dist = kernels::pairwise_distances(points);
    const auto n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!(dist[i * n + j] > min_separation)) {
                return false;
            }
        }
    }
    return true;
}

Embedding Embedding::padded(int new_dim) const {
    Embedding out{new_dim, {}};
    out.points.reserve(points.size());
    for (const auto& p : points) {
        out.points.push_back(embed_in(p, new_dim));
    }
    return out;
}

CoincidentPoints::CoincidentPoints(int i_, int j_, double distance_)
    : std::invalid_argument("points " + std::to_string(i_) + " and " + std::to_string(j_) +
                            " coincide (distance " + std::to_string(distance_) + ")"),
      i(i_),
      j(j_),
      distance(distance_) {}

InducedGraph induced_udg(std::span<const Point> points, double tol) {
    const auto n = points.size();
    const auto dist = kernels::pairwise_distances(points);
    std::vector<Graph::Edge> edges;
    std::vector<NearMiss> near;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = dist[i * n + j];
            if (d <= tol) {
                throw CoincidentPoints(static_cast<int>(i), static_cast<int>(j), d);
            }
            const double gap = std::abs(d - 1.0);
            if (gap <= tol) {
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
            } else if (gap <= 3.0 * tol) {
                near.push_back({static_cast<int>(i), static_cast<int>(j), d});
            }
        }
    }
    return {Graph(static_cast<int>(n), std::move(edges)), std::move(near)};
}

VerifyReport verify(const Graph& g, const Embedding& e, Mode mode, double tol) {
    if (static_cast<int>(e.points.size()) != g.n()) {
        throw std::invalid_argument("embedding has " + std::to_string(e.points.size()) + " points but graph has " +
                                    std::to_string(g.n()) + " vertices");
    }
    VerifyReport report;
    report.mode = mode;
    report.tol = tol;
    const auto n = e.points.size();
    const auto dist = kernels::pairwise_distances(e.points);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = dist[i * n + j];
            const double gap = std::abs(d - 1.0);
            const int ii = static_cast<int>(i);
            const int jj = static_cast<int>(j);
            report.min_pair_distance = std::min(report.min_pair_distance, d);
            if (d <= tol) {
                report.violations.push_back({ii, jj, d, ViolationKind::coincident});
            }
            if (g.adjacent(ii, jj)) {
                report.max_edge_error = std::max(report.max_edge_error, gap);
                if (gap > tol) {
                    report.violations.push_back({ii, jj, d, ViolationKind::edge_not_unit});
                }
            } else {
                report.min_nonedge_gap = std::min(report.min_nonedge_gap, gap);
                if (mode == Mode::faithful && gap <= tol) {
                    report.violations.push_back({ii, jj, d, ViolationKind::nonedge_unit});
                } else if (gap > tol && gap <= 3.0 * tol) {
                    report.near_misses.push_back({ii, jj, d});
                }
            }
        }
    }
    report.pass = report.violations.empty();
    return report;
}

const char* to_string(Mode mode) { return mode == Mode::faithful ? "faithful" : "distance"; }

const char* to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::edge_not_unit:
        return "edge_not_unit";
    case ViolationKind::nonedge_unit:
        return "nonedge_unit";
    case ViolationKind::coincident:
        return "coincident";
    }
    return "unknown";
}

}  // namespace udg
