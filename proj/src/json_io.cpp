#include "udg/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace udg {

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.n();
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    j["edges"] = std::move(edges);
    if (g.bipartition()) {
        j["bipartition_a"] = *g.bipartition();
    }
    return j;
}

Graph graph_from_json(const json& j) {
    try {
        if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
            throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
        }
        const int n = j.at("n").get<int>();
        std::vector<Graph::Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw std::invalid_argument("graph JSON edges must be pairs");
            }
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        std::optional<std::vector<int>> a;
        if (j.contains("bipartition_a") && !j.at("bipartition_a").is_null()) {
            a = j.at("bipartition_a").get<std::vector<int>>();
        }
        return Graph(n, std::move(edges), std::move(a));
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("malformed graph JSON: ") + ex.what());
    }
}

namespace {

std::string format17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string embedding_to_text(const Embedding& e, const Graph* graph) {
    std::ostringstream out;
    out << "{\"dim\":" << e.dim << ",\"points\":[";
    for (std::size_t i = 0; i < e.points.size(); ++i) {
        out << (i ? ",[" : "[");
        for (Eigen::Index c = 0; c < e.points[i].size(); ++c) {
            out << (c ? "," : "") << format17(e.points[i](c));
        }
        out << "]";
    }
    out << "]";
    if (graph) {
        out << ",\"graph\":" << graph_to_json(*graph).dump();
    }
    out << "}";
    return out.str();
}

Embedding embedding_from_json(const json& j) {
    try {
        Embedding e;
        e.dim = j.at("dim").get<int>();
        for (const auto& p : j.at("points")) {
            const auto coords = p.get<std::vector<double>>();
            if (static_cast<int>(coords.size()) != e.dim) {
                throw std::invalid_argument("embedding point has wrong number of coordinates");
            }
            e.points.emplace_back(Eigen::Map<const Eigen::VectorXd>(coords.data(), e.dim));
        }
        return e;
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("malformed embedding JSON: ") + ex.what());
    }
}

json embedding_to_json(const Embedding& e) {
    json points = json::array();
    for (const auto& p : e.points) {
        points.push_back(std::vector<double>(p.data(), p.data() + p.size()));
    }
    return {{"dim", e.dim}, {"points", std::move(points)}};
}

namespace {

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json report_to_json(const VerifyReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) {
        violations.push_back({{"pair", {v.i, v.j}}, {"distance", v.distance}, {"kind", to_string(v.kind)}});
    }
    json near = json::array();
    for (const auto& m : r.near_misses) {
        near.push_back({{"pair", {m.i, m.j}}, {"distance", m.distance}});
    }
    return {{"pass", r.pass},
            {"mode", to_string(r.mode)},
            {"tol", r.tol},
            {"violations", std::move(violations)},
            {"near_misses", std::move(near)},
            {"max_edge_error", r.max_edge_error},
            {"min_nonedge_gap", finite_or_null(r.min_nonedge_gap)},
            {"min_pair_distance", finite_or_null(r.min_pair_distance)}};
}

json report_to_json(const AuditReport& r) {
    json rules = json::array();
    for (const auto& rule : r.rule_chain) {
        rules.push_back({{"rule", rule.rule}, {"params", rule.params}});
    }
    json j = {{"graph_id", r.graph_id},
              {"d_queried", r.d_queried},
              {"verdict", to_string(r.verdict)},
              {"side", to_string(r.side)},
              {"k_lower", r.k_lower},
              {"k_upper", r.k_upper},
              {"s", r.s},
              {"required_dim", r.required_dim},
              {"rule_chain", std::move(rules)}};
    j["witness"] = r.witness ? embedding_to_json(*r.witness) : json(nullptr);
    return j;
}

json config_to_json(const SolverConfig& cfg) {
    return {{"restarts", cfg.restarts},     {"max_iters", cfg.max_iters},
            {"tol_residual", cfg.tol_residual}, {"margin_nonedge", cfg.margin_nonedge},
            {"init_scale", cfg.init_scale}, {"seed", cfg.seed}};
}

json report_to_json(const SolveResult& r) {
    json j = {{"status", to_string(r.status)},
              {"best_residual", finite_or_null(r.best_residual)},
              {"restarts_used", r.restarts_used},
              {"rejected", r.rejected}};
    j["embedding"] = r.embedding ? embedding_to_json(*r.embedding) : json(nullptr);
    return j;
}

namespace {

const char* entry_status(const CensusEntry& e) {
    if (e.realizable) {
        return "REALIZABLE";
    }
    return e.method == Method::exact_oracle ? "NOT_REALIZABLE" : "PRESUMED_NOT";
}

}  // namespace

json report_to_json(const CensusReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        const Graph g = graph_from_mask(r.n, e.mask);
        json je = {{"graph_id", graph_id(g)},
                   {"mask", e.mask},
                   {"edges", graph_to_json(g)["edges"]},
                   {"status", entry_status(e)},
                   {"method", to_string(e.method)},
                   {"representative", e.representative}};
        je["residual"] = e.residual ? finite_or_null(*e.residual) : json(nullptr);
        if (e.cross_check) {
            je["cross_check_found"] = *e.cross_check;
        }
        entries.push_back(std::move(je));
    }
    return {{"n", r.n},
            {"d", r.d},
            {"mode", to_string(r.mode)},
            {"count_realizable", r.count_realizable},
            {"count_presumed_not", r.count_presumed_not},
            {"exact", r.exact},
            {"classes", r.classes},
            {"config", config_to_json(r.config)},
            {"entries", std::move(entries)}};
}

std::string census_csv(const CensusReport& r) {
    std::ostringstream out;
    out << "graph_id,edges,status,method,residual\n";
    for (const auto& e : r.entries) {
        const Graph g = graph_from_mask(r.n, e.mask);
        out << graph_id(g) << ",\"";
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            out << (i ? " " : "") << g.edges()[i].first << "-" << g.edges()[i].second;
        }
        out << "\"," << entry_status(e) << "," << to_string(e.method) << ",";
        if (e.residual) {
            out << format17(*e.residual);
        }
        out << "\n";
    }
    return out.str();
}

std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace udg
