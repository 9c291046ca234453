#pragma once

// Certified bounds on the dimension needed for a faithful realization of a
// bipartite graph. The lower side combines an affine-independence chain with
// the offset forced by full-degree vertices; the upper side must produce an
// embedding that passes the verifier.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "udg/embedding.hpp"
#include "udg/graph.hpp"
#include "udg/hsystem.hpp"
#include "udg/solver.hpp"

namespace udg {

enum class Side { a, b };

/// H-system of one side of a bipartite graph: the other side is the ground
/// set, each vertex of this side contributes its neighborhood.
struct BipartiteHSystem {
    HSystem system;
    Side side = Side::a;
    /// Graph vertex of ground-set index j.
    std::vector<int> ground;
    /// Graph vertex that produced system.conditions[i].
    std::vector<int> condition_vertex;
    /// Graph vertices adjacent to the whole ground set.
    std::vector<int> full_vertices;
};

/// Throws std::invalid_argument for non-bipartite graphs.
BipartiteHSystem hsystem_of(const Graph& g, Side side);

/// C(k+3, 2) - 3: an H-system that needs the sphere S^{k+1} has at least
/// this many condition elements.
int lemedge_bound(int k);

struct SphereGuarantee {
    int s = 0;
    int k_realizable = 1;
    /// Positions of the chosen subsequence (0-based).
    std::vector<int> indices;
};

/// Greedy scan for the longest subsequence whose j-th element (1-based) is
/// at least j + 2. Sizes must be nondecreasing (std::invalid_argument
/// otherwise).
SphereGuarantee lemedge2_guarantee(std::span<const int> sizes);

struct RuleApplication {
    std::string rule;
    nlohmann::json params;
};

struct ChainBound {
    int k_lower = -1;
    /// Ground-set indices of the best independence chain found.
    std::vector<int> chain;
    long nodes = 0;
    bool budget_exhausted = false;
    std::vector<RuleApplication> rules;
};

inline constexpr long kChainNodeBudget = 100000;

/// Lower bound on the sphere dimension: three distinct points need k >= 1,
/// and a chain j_1, j_2, ... where each j_t (t >= 4) lies outside some
/// condition containing all earlier elements forces c affinely independent
/// points, so k >= c - 2.
ChainBound k_lower_chain(const HSystem& h, long node_budget = kChainNodeBudget);
int k_lower_bound(const HSystem& h);

/// Sum of |H| over all conditions including the full ones.
long edge_sum(const HSystem& h);

enum class Verdict { not_realizable, realizable, undecided };

struct AuditOptions {
    std::uint64_t seed = 0;
    int max_retries = 50;
    /// Try the numeric solver when no construction applies.
    bool numeric_fallback = false;
    SolverConfig solver;
};

struct AuditReport {
    std::string graph_id;
    int d_queried = 0;
    Verdict verdict = Verdict::undecided;
    /// Bounds on the sphere dimension of the side that gave the strongest
    /// lower bound.
    Side side = Side::a;
    int k_lower = -1;
    int k_upper = 1;
    int s = 0;
    /// Smallest d not excluded by the lower-bound rules; 0 when no rule
    /// applies.
    int required_dim = 0;
    std::vector<RuleApplication> rule_chain;
    std::optional<Embedding> witness;
};

/// Places the ground set of `side`'s H-system on a sphere via
/// realize_hsystem, vertices adjacent to all of it on the complementary
/// sphere (or the center when there is one such vertex), then the rest of
/// `side` on the complementary spheres of their neighborhoods. Needs
/// d >= k + 3 (s >= 3), k + 2 (s = 2) or k + 1 (s <= 1) with k the
/// sphere dimension from lemedge2_guarantee. Returns only verified faithful embeddings.
std::optional<Embedding> embed_via_hsystem(const Graph& g, Side side, int d, std::uint64_t seed,
                                           int max_retries = 50);

/// Throws std::invalid_argument for non-bipartite graphs or d < 1.
AuditReport faithful_dim_audit(const Graph& g, int d, const AuditOptions& options = {});

const char* to_string(Verdict verdict);
const char* to_string(Side side);

}  // namespace udg
