#pragma once

// Multistart least-squares search for unit-distance realizations:
// minimize sum over edges of (|x_u - x_v|^2 - 1)^2, then accept or reject the
// minimizer against the non-edge and distinctness requirements.

#include <cstdint>
#include <optional>

#include "udg/embedding.hpp"
#include "udg/graph.hpp"
#include "udg/verify.hpp"

namespace udg {

struct SolverConfig {
    int restarts = 200;
    int max_iters = 2000;
    /// Threshold on the objective (sum of squared edge residuals).
    double tol_residual = 1e-12;
    double margin_nonedge = 1e-3;
    /// Starting points are uniform in a cube of this side length.
    double init_scale = 2.0;
    std::uint64_t seed = 0;
    /// Worker threads for restarts; the result does not depend on it.
    int jobs = 1;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

enum class SolveStatus { found, not_found };

struct SolveResult {
    SolveStatus status = SolveStatus::not_found;
    std::optional<Embedding> embedding;
    /// Smallest objective value reached by any restart that was examined.
    double best_residual = 0.0;
    int restarts_used = 0;
    /// Restarts that converged but failed the non-edge or distinctness test.
    int rejected = 0;
};

/// Tolerance at which FOUND embeddings are guaranteed to verify:
/// sqrt(tol_residual), floored at 1e-9.
double found_tolerance(const SolverConfig& cfg);

SolveResult solve_faithful(const Graph& g, int d, const SolverConfig& cfg = {});
SolveResult solve_distance(const Graph& g, int d, const SolverConfig& cfg = {});
SolveResult solve(const Graph& g, int d, Mode mode, const SolverConfig& cfg = {});

/// Max over coordinates of |analytic - fd| / max(1, |analytic|, |fd|) at a
/// random point, fd being central differences with step 1e-6.
double gradient_check(const Graph& g, int d, std::uint64_t seed);

const char* to_string(SolveStatus status);

}  // namespace udg
