#pragma once

// Constructive embeddings: orthogonal circles for colorable graphs, the
// singleton-augmented variant, and faithful embeddings of bipartite graphs
// with bounded A-side degree.

#include <cstdint>

#include "udg/embedding.hpp"
#include "udg/errors.hpp"
#include "udg/graph.hpp"

namespace udg {

/// Class c goes on the circle of radius 1/sqrt(2) in coordinates (2c, 2c+1);
/// the j-th vertex of a class of size k sits at angle 2 pi j / k. Points on
/// different circles are at distance exactly 1. Output lives in R^{2k}.
/// Throws PreconditionError for an improper coloring or one that does not
/// cover every vertex exactly once.
Embedding embed_colorable(const Graph& g, const Coloring& coloring);

/// Like embed_colorable, but each singleton class takes a single fresh axis
/// (the point 1/sqrt(2) e_axis) instead of a full circle. With a singleton
/// classes and b larger ones the output lives in R^{a+2b}.
Embedding embed_singleton_coloring(const Graph& g, const Coloring& coloring);

struct BipartiteEmbedOptions {
    /// B is sampled in a ball of this diameter.
    double b_diameter = 0.1;
    /// Circumradii of B-neighborhoods must stay this far from 1/2.
    double radius_gap = 0.05;
    double tol_construct = 1e-7;
    double margin_nonedge = 1e-4;
    double tol_distinct = 1e-6;
    int max_retries = 50;
    /// Random points tried on a complementary sphere before reseeding.
    int max_candidates = 64;
};

/// Faithful embedding in R^d of a bipartite graph whose A-side vertices have
/// degree <= d, no three of degree d sharing a neighborhood. B is sampled in
/// a small ball and resampled until the neighborhood spheres are in general
/// position; each A vertex is then placed on the complementary sphere of its
/// neighborhood. The A side is the stored bipartition, or a computed one.
/// Throws PreconditionError (with witnesses) or ConstructionFailure.
Embedding embed_bipartite_faithful(const Graph& g, int d, std::uint64_t seed,
                                   const BipartiteEmbedOptions& options = {});

/// Precondition check used by embed_bipartite_faithful; returns the A side on
/// success.
std::vector<int> check_bipartite_faithful_preconditions(const Graph& g, int d);

}  // namespace udg
