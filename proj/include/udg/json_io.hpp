#pragma once

// JSON formats shared by the CLI and the tests.
//
//   graph:     {"n": 4, "edges": [[0,1],...], "bipartition_a": [0,1]}
//   embedding: {"dim": 3, "points": [[x,y,z],...]}, optionally with the
//              graph it realizes under "graph"; floats at 17 significant digits

#include <string>

#include <json.hpp>

#include "udg/audit.hpp"
#include "udg/census.hpp"
#include "udg/embedding.hpp"
#include "udg/graph.hpp"
#include "udg/solver.hpp"
#include "udg/verify.hpp"

namespace udg {

using nlohmann::json;

json graph_to_json(const Graph& g);
/// Throws std::invalid_argument on malformed input.
Graph graph_from_json(const json& j);

/// Embedding text with every coordinate printed by %.17g.
std::string embedding_to_text(const Embedding& e, const Graph* graph = nullptr);
Embedding embedding_from_json(const json& j);

json embedding_to_json(const Embedding& e);
json report_to_json(const VerifyReport& r);
json report_to_json(const AuditReport& r);
json report_to_json(const SolveResult& r);
json report_to_json(const CensusReport& r);
json config_to_json(const SolverConfig& cfg);

/// One line per labelled graph: graph_id,edges,status,method,residual.
std::string census_csv(const CensusReport& r);

/// Big integers travel as decimal strings.
std::string to_decimal(const BigInt& v);

}  // namespace udg
