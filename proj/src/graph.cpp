#include "udg/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <queue>
#include <stdexcept>

namespace udg {

Graph::Graph(int n, std::vector<Edge> edges, std::optional<std::vector<int>> bipartition_a)
    : n_(n), edges_(std::move(edges)), bipartition_a_(std::move(bipartition_a)) {
    if (n_ < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    adj_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) {
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        }
        if (u == v) {
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        }
        if (u > v) {
            std::swap(u, v);
        }
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto [u, v] = edges_[i];
        if (i > 0 && edges_[i - 1] == edges_[i]) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        adj_[static_cast<std::size_t>(u * n_ + v)] = 1;
        adj_[static_cast<std::size_t>(v * n_ + u)] = 1;
    }
    if (bipartition_a_) {
        auto& a = *bipartition_a_;
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
            throw std::invalid_argument("duplicate vertex in bipartition");
        }
        std::vector<char> in_a(static_cast<std::size_t>(n_), 0);
        for (int v : a) {
            if (v < 0 || v >= n_) {
                throw std::invalid_argument("bipartition vertex out of range");
            }
            in_a[static_cast<std::size_t>(v)] = 1;
        }
        for (const auto& [u, v] : edges_) {
            if (in_a[static_cast<std::size_t>(u)] == in_a[static_cast<std::size_t>(v)]) {
                throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                            ") does not cross the bipartition");
            }
        }
    }
}

int Graph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u) {
        d += adjacent(v, u) ? 1 : 0;
    }
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u) {
        if (adjacent(v, u)) {
            out.push_back(u);
        }
    }
    return out;
}

std::vector<int> Graph::b_side() const {
    std::vector<int> out;
    if (!bipartition_a_) {
        return out;
    }
    for (int v = 0; v < n_; ++v) {
        if (!std::binary_search(bipartition_a_->begin(), bipartition_a_->end(), v)) {
            out.push_back(v);
        }
    }
    return out;
}

Graph Graph::with_bipartition(std::vector<int> a_side) const { return Graph(n_, edges_, std::move(a_side)); }

Graph Graph::without_bipartition() const { return Graph(n_, edges_); }

Graph Graph::complement() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (!adjacent(u, v)) {
                out.emplace_back(u, v);
            }
        }
    }
    return Graph(n_, std::move(out));
}

Graph Graph::induced(std::span<const int> vertices) const {
    std::vector<Edge> out;
    const auto k = static_cast<int>(vertices.size());
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (adjacent(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)])) {
                out.emplace_back(i, j);
            }
        }
    }
    return Graph(k, std::move(out));
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.n()), -1);
    for (int root = 0; root < g.n(); ++root) {
        if (side[static_cast<std::size_t>(root)] != -1) {
            continue;
        }
        side[static_cast<std::size_t>(root)] = 0;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop();
            for (int v : g.neighbors(u)) {
                auto& sv = side[static_cast<std::size_t>(v)];
                if (sv == -1) {
                    sv = 1 - side[static_cast<std::size_t>(u)];
                    queue.push(v);
                } else if (sv == side[static_cast<std::size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<int> a;
    for (int v = 0; v < g.n(); ++v) {
        if (side[static_cast<std::size_t>(v)] == 0) {
            a.push_back(v);
        }
    }
    return a;
}

std::vector<int> bipartition_or_compute(const Graph& g) {
    if (g.bipartition()) {
        return *g.bipartition();
    }
    auto a = two_coloring(g);
    if (!a) {
        throw std::invalid_argument("graph is not bipartite");
    }
    return *a;
}

namespace {

std::vector<int> iota_vec(int begin, int end) {
    std::vector<int> out;
    for (int i = begin; i < end; ++i) {
        out.push_back(i);
    }
    return out;
}

}  // namespace

Graph make_kprime(int d) {
    if (d < 4) {
        throw std::invalid_argument("make_kprime needs d >= 4");
    }
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i == j && i >= 3) {
                continue;
            }
            edges.emplace_back(i, d + j);
        }
    }
    return Graph(2 * d, std::move(edges), iota_vec(0, d));
}

Graph make_kdoubleprime(int d) {
    if (d < 4) {
        throw std::invalid_argument("make_kdoubleprime needs d >= 4");
    }
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i > j || i < 3) {
                edges.emplace_back(i, d + j);
            }
        }
    }
    return Graph(2 * d, std::move(edges), iota_vec(0, d));
}

Graph make_remark_graph(int d) {
    if (d < 1) {
        throw std::invalid_argument("make_remark_graph needs d >= 1");
    }
    const int part = d + 2;
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < part; ++i) {
        for (int j = 0; j <= i; ++j) {
            edges.emplace_back(i, part + j);
        }
    }
    return Graph(2 * part, std::move(edges), iota_vec(0, part));
}

Graph make_complete_multipartite(std::span<const int> sizes) {
    if (sizes.empty()) {
        throw std::invalid_argument("make_complete_multipartite needs at least one part");
    }
    std::vector<int> part_of;
    for (std::size_t p = 0; p < sizes.size(); ++p) {
        if (sizes[p] < 1) {
            throw std::invalid_argument("part sizes must be >= 1");
        }
        part_of.insert(part_of.end(), static_cast<std::size_t>(sizes[p]), static_cast<int>(p));
    }
    const auto n = static_cast<int>(part_of.size());
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) {
                edges.emplace_back(u, v);
            }
        }
    }
    if (sizes.size() == 2) {
        return Graph(n, std::move(edges), iota_vec(0, sizes[0]));
    }
    return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 1) {
        throw std::invalid_argument("make_complete needs n >= 1");
    }
    std::vector<int> ones(static_cast<std::size_t>(n), 1);
    if (n == 2) {
        return Graph(2, {{0, 1}});
    }
    return make_complete_multipartite(ones);
}

Graph make_cycle(int n) {
    if (n < 3) {
        throw std::invalid_argument("make_cycle needs n >= 3");
    }
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
    }
    return Graph(n, std::move(edges));
}

Graph make_path(int n) {
    if (n < 1) {
        throw std::invalid_argument("make_path needs n >= 1");
    }
    std::vector<Graph::Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph(n, std::move(edges));
}

Graph make_petersen() {
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph(10, std::move(edges));
}

bool is_proper_coloring(const Graph& g, const Coloring& coloring) {
    std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t c = 0; c < coloring.size(); ++c) {
        for (int v : coloring[c]) {
            if (v < 0 || v >= g.n() || color[static_cast<std::size_t>(v)] != -1) {
                return false;
            }
            color[static_cast<std::size_t>(v)] = static_cast<int>(c);
        }
    }
    if (std::find(color.begin(), color.end(), -1) != color.end()) {
        return false;
    }
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Graph::Edge& e) {
        return color[static_cast<std::size_t>(e.first)] != color[static_cast<std::size_t>(e.second)];
    });
}

namespace {

Coloring classes_from(const std::vector<int>& color, int k) {
    Coloring out(static_cast<std::size_t>(k));
    for (std::size_t v = 0; v < color.size(); ++v) {
        out[static_cast<std::size_t>(color[v])].push_back(static_cast<int>(v));
    }
    return out;
}

}  // namespace

Coloring greedy_coloring(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
    int used = 0;
    for (int v = 0; v < g.n(); ++v) {
        std::vector<char> taken(static_cast<std::size_t>(used) + 1, 0);
        for (int u : g.neighbors(v)) {
            const int cu = color[static_cast<std::size_t>(u)];
            if (cu >= 0) {
                taken[static_cast<std::size_t>(cu)] = 1;
            }
        }
        int c = 0;
        while (taken[static_cast<std::size_t>(c)] != 0) {
            ++c;
        }
        color[static_cast<std::size_t>(v)] = c;
        used = std::max(used, c + 1);
    }
    return classes_from(color, used);
}

Coloring exact_coloring_small(const Graph& g, int max_n) {
    if (g.n() > max_n) {
        throw std::invalid_argument("exact coloring limited to " + std::to_string(max_n) + " vertices");
    }
    if (g.n() == 0) {
        return {};
    }
    std::vector<int> order(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        order[static_cast<std::size_t>(v)] = v;
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });

    Coloring best = greedy_coloring(g);
    const int upper = static_cast<int>(best.size());
    std::vector<int> color(static_cast<std::size_t>(g.n()), -1);

    // Try k = 1, 2, ... below the greedy bound; colors are introduced in order
    // to break the symmetry between classes.
    std::function<bool(std::size_t, int, int)> extend = [&](std::size_t pos, int used, int k) -> bool {
        if (pos == order.size()) {
            return true;
        }
        const int v = order[pos];
        for (int c = 0; c < std::min(used + 1, k); ++c) {
            bool ok = true;
            for (int u : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(u)] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                continue;
            }
            color[static_cast<std::size_t>(v)] = c;
            if (extend(pos + 1, std::max(used, c + 1), k)) {
                return true;
            }
            color[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    for (int k = 1; k < upper; ++k) {
        std::fill(color.begin(), color.end(), -1);
        if (extend(0, 0, k)) {
            return classes_from(color, k);
        }
    }
    return best;
}

int exact_chromatic_small(const Graph& g, int max_n) {
    return static_cast<int>(exact_coloring_small(g, max_n).size());
}

std::optional<int> girth(const Graph& g) {
    std::optional<int> best;
    const auto n = static_cast<std::size_t>(g.n());
    for (int root = 0; root < g.n(); ++root) {
        std::vector<int> dist(n, -1);
        std::vector<int> parent(n, -1);
        std::queue<int> queue;
        dist[static_cast<std::size_t>(root)] = 0;
        queue.push(root);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop();
            for (int v : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(v)] == -1) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(v)] = u;
                    queue.push(v);
                } else if (parent[static_cast<std::size_t>(u)] != v) {
                    const int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
                    if (!best || len < *best) {
                        best = len;
                    }
                }
            }
        }
    }
    return best;
}

std::string graph_id(const Graph& g) {
    // FNV-1a over (n, edges).
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xffU;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(g.n()));
    for (const auto& [u, v] : g.edges()) {
        mix(static_cast<std::uint64_t>(u));
        mix(static_cast<std::uint64_t>(v));
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "n%d-m%zu-%016llx", g.n(), g.edge_count(), static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace udg
