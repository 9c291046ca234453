#include <cmath>
#include <numbers>
#include <string>

#include "udg/embed.hpp"

namespace udg {

namespace {

void require_proper(const Graph& g, const Coloring& coloring) {
    std::vector<int> seen(static_cast<std::size_t>(g.n()), 0);
    for (const auto& cls : coloring) {
        if (cls.empty()) {
            throw PreconditionError("coloring has an empty class");
        }
        for (const int v : cls) {
            if (v < 0 || v >= g.n()) {
                throw PreconditionError("coloring names vertex " + std::to_string(v) + " outside the graph", {v});
            }
            ++seen[static_cast<std::size_t>(v)];
        }
    }
    for (int v = 0; v < g.n(); ++v) {
        if (seen[static_cast<std::size_t>(v)] != 1) {
            throw PreconditionError("vertex " + std::to_string(v) + " must appear in exactly one class", {v});
        }
    }
    for (const auto& cls : coloring) {
        for (std::size_t i = 0; i < cls.size(); ++i) {
            for (std::size_t j = i + 1; j < cls.size(); ++j) {
                if (g.adjacent(cls[i], cls[j])) {
                    throw PreconditionError("coloring is not proper: edge inside a class", {cls[i], cls[j]});
                }
            }
        }
    }
}

void put_on_circle(Embedding& e, const std::vector<int>& cls, int axis) {
    const double r = std::numbers::sqrt2 / 2.0;
    const double k = static_cast<double>(cls.size());
    for (std::size_t j = 0; j < cls.size(); ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / k;
        auto& p = e.points[static_cast<std::size_t>(cls[j])];
        p(axis) = r * std::cos(theta);
        p(axis + 1) = r * std::sin(theta);
    }
}

}  // namespace

Embedding embed_colorable(const Graph& g, const Coloring& coloring) {
    require_proper(g, coloring);
    const int dim = 2 * static_cast<int>(coloring.size());
    Embedding e{dim, std::vector<Point>(static_cast<std::size_t>(g.n()), Point::Zero(dim))};
    for (std::size_t c = 0; c < coloring.size(); ++c) {
        put_on_circle(e, coloring[c], 2 * static_cast<int>(c));
    }
    return e;
}

Embedding embed_singleton_coloring(const Graph& g, const Coloring& coloring) {
    require_proper(g, coloring);
    int dim = 0;
    for (const auto& cls : coloring) {
        dim += cls.size() == 1 ? 1 : 2;
    }
    Embedding e{dim, std::vector<Point>(static_cast<std::size_t>(g.n()), Point::Zero(dim))};
    // Circles first, then one axis per singleton.
    int axis = 0;
    for (const auto& cls : coloring) {
        if (cls.size() > 1) {
            put_on_circle(e, cls, axis);
            axis += 2;
        }
    }
    for (const auto& cls : coloring) {
        if (cls.size() == 1) {
            e.points[static_cast<std::size_t>(cls[0])](axis) = std::numbers::sqrt2 / 2.0;
            ++axis;
        }
    }
    return e;
}

}  // namespace udg
