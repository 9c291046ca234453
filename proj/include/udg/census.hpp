#pragma once

// Exhaustive counting of small labelled (faithful) distance graphs, the
// zero-pattern upper bound and the Ramsey-type calculators.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "udg/embedding.hpp"
#include "udg/graph.hpp"
#include "udg/solver.hpp"
#include "udg/verify.hpp"

namespace udg {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(unsigned n, unsigned k);

/// True iff g is a disjoint union of paths, which is exactly when g is a
/// faithful distance graph in R^1.
bool linear_forest_oracle(const Graph& g);

/// Faithful embedding of a linear forest in R^1: each path on consecutive
/// integers, components offset by half-integers. Throws PreconditionError
/// for other graphs.
Embedding linear_forest_embedding(const Graph& g);

struct ZeroPatternBound {
    bool applicable = false;
    BigInt value;
    /// Why the bound holds, or which hypothesis failed.
    std::string reason;
};

/// C(n(n-1), nd), the number of faithful distance graphs it bounds being
/// those on n labelled vertices in R^d. Requires n >= 2d and nd <= n(n-1).
/// The counting argument needs as many polynomials as variables
/// (n(n-1)/2 >= nd); when that fails the value is still reported if it is at
/// least 2^{n(n-1)/2}, which bounds the count trivially.
ZeroPatternBound zero_pattern_bound(int n, int d);

/// C(m, s) * 2 * B < 2^{C(s,2)} with B = min(2^{C(s,2)}, zero-pattern bound):
/// the condition under which a random graph on m vertices shows that the
/// Ramsey number for s-vertex faithful distance graphs exceeds m.
bool ramsey_fd_inequality(long long m, int s, int d);

/// Largest m satisfying ramsey_fd_inequality. Requires s >= 2 and s >= 2d
/// (PreconditionError otherwise).
long long ramsey_fd_lower(int s, int d);

/// Smallest m <= max_m such that every graph on m vertices has s vertices
/// inducing a faithful distance graph in R^d, in the graph or its complement;
/// nullopt when none is found. Supports 2 <= s <= 3 and max_m <= 8.
std::optional<int> ramsey_exact(int s, int d, int max_m, const SolverConfig& cfg = {});

enum class Method { exact_oracle, solver_found, solver_exhausted };

struct CensusEntry {
    /// Bit i set iff pair i (lexicographic order of (u, v), u < v) is an edge.
    std::uint32_t mask = 0;
    bool realizable = false;
    Method method = Method::exact_oracle;
    /// Best solver residual; absent for oracle classifications.
    std::optional<double> residual;
    /// Representative of the isomorphism class the entry was decided by.
    std::uint32_t representative = 0;
    /// Independent solver verdict when a cross-check was requested.
    std::optional<bool> cross_check;
};

struct CensusOptions {
    /// Refuse to run when some classification would need the solver.
    bool exact_only = false;
    /// Also run the solver on every labelled graph where an exact oracle
    /// decided, recording its verdict in CensusEntry::cross_check.
    bool cross_check = false;
};

struct CensusReport {
    int n = 0;
    int d = 0;
    Mode mode = Mode::faithful;
    long long count_realizable = 0;
    long long count_presumed_not = 0;
    /// Every entry decided by an exact oracle.
    bool exact = false;
    int classes = 0;
    std::vector<CensusEntry> entries;
    SolverConfig config;
};

/// Pairs (u, v), u < v, in lexicographic order: the bit order of masks.
std::vector<Graph::Edge> census_pairs(int n);
Graph graph_from_mask(int n, std::uint32_t mask);

/// Canonical (smallest) mask over all vertex permutations.
std::uint32_t canonical_mask(int n, std::uint32_t mask);

/// Complete multipartite graph with floor(d/2)+1 parts of size 3, which is
/// never a distance graph in R^d, as a subgraph (not necessarily induced).
/// Always false for d < 2.
bool contains_distance_obstruction(const Graph& g, int d);

/// Requires 1 <= n <= 5 and d >= 1 (PreconditionError otherwise).
CensusReport count_faithful(int n, int d, const SolverConfig& cfg = {}, const CensusOptions& options = {});
CensusReport count_distance(int n, int d, const SolverConfig& cfg = {}, const CensusOptions& options = {});

const char* to_string(Method method);

}  // namespace udg
