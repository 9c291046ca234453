#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace udg {

/// Labelled simple graph on vertices 0..n-1 with an optional bipartition.
///
/// Edges are stored normalized (u < v) and sorted lexicographically. The
/// bipartition, when present, is the sorted list of A-side vertices and every
/// edge must cross it. Construction throws std::invalid_argument when any of
/// these invariants is violated.
class Graph {
public:
    using Edge = std::pair<int, int>;

    Graph() = default;
    Graph(int n, std::vector<Edge> edges, std::optional<std::vector<int>> bipartition_a = std::nullopt);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::optional<std::vector<int>>& bipartition() const { return bipartition_a_; }

    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u * n_ + v)] != 0; }
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    /// B side of the bipartition (complement of A), empty if none is stored.
    std::vector<int> b_side() const;

    Graph with_bipartition(std::vector<int> a_side) const;
    Graph without_bipartition() const;
    Graph complement() const;
    /// Induced subgraph; vertex i of the result is vertices[i].
    Graph induced(std::span<const int> vertices) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.bipartition_a_ == b.bipartition_a_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::optional<std::vector<int>> bipartition_a_;
    std::vector<char> adj_;
};

/// A-side of a proper 2-coloring (smallest vertex of each component goes to
/// A), or nullopt when the graph has an odd cycle.
std::optional<std::vector<int>> two_coloring(const Graph& g);

/// Stored bipartition, or a computed one. Throws std::invalid_argument for
/// non-bipartite graphs.
std::vector<int> bipartition_or_compute(const Graph& g);

/// K_{d,d} minus the matching (a_i, b_i), i = 4..d (1-based). A = 0..d-1.
Graph make_kprime(int d);
/// Edges (a_i, b_j) with i > j or i <= 3 (1-based), parts of size d.
Graph make_kdoubleprime(int d);
/// Edges (a_i, b_j) with i >= j, parts of size d + 2.
Graph make_remark_graph(int d);
Graph make_complete_multipartite(std::span<const int> sizes);
Graph make_complete(int n);
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_petersen();

using Coloring = std::vector<std::vector<int>>;

bool is_proper_coloring(const Graph& g, const Coloring& coloring);
/// First-fit in vertex order.
Coloring greedy_coloring(const Graph& g);
/// Minimum coloring by branch and bound. Throws std::invalid_argument when
/// g.n() > max_n.
Coloring exact_coloring_small(const Graph& g, int max_n = 16);
int exact_chromatic_small(const Graph& g, int max_n = 16);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Stable short identifier derived from n and the edge list.
std::string graph_id(const Graph& g);

}  // namespace udg
