// udg: generate, realize, verify, audit and count unit-distance graphs.
//
// Exit codes: 0 success or PASS, 1 verification FAIL / NOT_REALIZABLE /
// nothing found, 2 usage or I/O error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "udg/audit.hpp"
#include "udg/census.hpp"
#include "udg/embed.hpp"
#include "udg/json_io.hpp"
#include "udg/solver.hpp"
#include "udg/verify.hpp"

namespace {

using udg::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json read_json(const std::string& path) {
    const std::string text = read_source(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError("invalid JSON in " + (path.empty() ? std::string("stdin") : path) + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out || !(out << text << "\n")) {
        throw UsageError("cannot write " + path);
    }
}

// A graph file, or a JSON document that carries one under "graph" (as the
// output of `realize` does).
udg::Graph graph_from_document(const json& j) {
    if (j.contains("graph") && j.at("graph").is_object()) {
        return udg::graph_from_json(j.at("graph"));
    }
    return udg::graph_from_json(j);
}

udg::Mode parse_mode(const std::string& s) { return s == "distance" ? udg::Mode::distance : udg::Mode::faithful; }

int default_jobs() {
    if (const char* env = std::getenv("UDG_JOBS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            throw UsageError("UDG_JOBS must be an integer");
        }
    }
    return 1;
}

struct SolverFlags {
    udg::SolverConfig cfg;
    int jobs = 0;

    void add(CLI::App* app) {
        app->add_option("--restarts", cfg.restarts, "Solver restarts")->check(CLI::PositiveNumber);
        app->add_option("--max-iters", cfg.max_iters, "Iterations per restart")->check(CLI::PositiveNumber);
        app->add_option("--tol-residual", cfg.tol_residual, "Accept threshold on the objective");
        app->add_option("--margin", cfg.margin_nonedge, "Required gap between non-edge distances and 1");
        app->add_option("--jobs", jobs, "Worker threads (default: UDG_JOBS or 1)");
    }

    udg::SolverConfig resolve(std::uint64_t seed) const {
        udg::SolverConfig out = cfg;
        out.seed = seed;
        out.jobs = jobs > 0 ? jobs : default_jobs();
        return out;
    }
};

udg::Graph generate(const std::string& kind, const std::vector<int>& params) {
    auto need = [&](std::size_t count) {
        if (params.size() != count) {
            throw UsageError("gen " + kind + " takes " + std::to_string(count) + " integer parameter(s)");
        }
    };
    if (kind == "kprime") {
        need(1);
        return udg::make_kprime(params[0]);
    }
    if (kind == "kdoubleprime") {
        need(1);
        return udg::make_kdoubleprime(params[0]);
    }
    if (kind == "remark") {
        need(1);
        return udg::make_remark_graph(params[0]);
    }
    if (kind == "multipartite") {
        return udg::make_complete_multipartite(params);
    }
    if (kind == "complete") {
        need(1);
        return udg::make_complete(params[0]);
    }
    if (kind == "cycle") {
        need(1);
        return udg::make_cycle(params[0]);
    }
    if (kind == "path") {
        need(1);
        return udg::make_path(params[0]);
    }
    if (kind == "petersen") {
        need(0);
        return udg::make_petersen();
    }
    throw UsageError("unknown generator " + kind);
}

udg::Coloring best_coloring(const udg::Graph& g) {
    return g.n() <= 16 ? udg::exact_coloring_small(g) : udg::greedy_coloring(g);
}

// Orthographic view: identity for d <= 2, a fixed oblique projection of the
// first three coordinates otherwise.
std::pair<double, double> project(const udg::Point& p) {
    const double x = p.size() > 0 ? p(0) : 0.0;
    const double y = p.size() > 1 ? p(1) : 0.0;
    if (p.size() <= 2) {
        return {x, y};
    }
    const double z = p(2);
    const double a = std::numbers::pi / 6.0;
    return {(x - y) * std::cos(a), z + (x + y) * std::sin(a) * 0.5};
}

std::string render_svg(const udg::Embedding& e, const std::optional<udg::Graph>& g) {
    std::vector<std::pair<double, double>> xy;
    double lo_x = 0.0, hi_x = 0.0, lo_y = 0.0, hi_y = 0.0;
    for (std::size_t i = 0; i < e.points.size(); ++i) {
        const auto q = project(e.points[i]);
        if (i == 0) {
            lo_x = hi_x = q.first;
            lo_y = hi_y = q.second;
        }
        lo_x = std::min(lo_x, q.first);
        hi_x = std::max(hi_x, q.first);
        lo_y = std::min(lo_y, q.second);
        hi_y = std::max(hi_y, q.second);
        xy.push_back(q);
    }
    const double size = 480.0;
    const double pad = 20.0;
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    const double scale = (size - 2 * pad) / span;
    auto sx = [&](double x) { return pad + (x - lo_x) * scale; };
    auto sy = [&](double y) { return size - pad - (y - lo_y) * scale; };
    std::ostringstream out;
    char buf[160];
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (g) {
        for (const auto& [u, v] : g->edges()) {
            std::snprintf(buf, sizeof buf,
                          "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"#555\" stroke-width=\"1\"/>\n",
                          sx(xy[static_cast<std::size_t>(u)].first), sy(xy[static_cast<std::size_t>(u)].second),
                          sx(xy[static_cast<std::size_t>(v)].first), sy(xy[static_cast<std::size_t>(v)].second));
            out << buf;
        }
    }
    for (std::size_t i = 0; i < xy.size(); ++i) {
        std::snprintf(buf, sizeof buf, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"4\" fill=\"#1f77b4\"/>\n",
                      sx(xy[i].first), sy(xy[i].second));
        out << buf;
        std::snprintf(buf, sizeof buf, "<text x=\"%.3f\" y=\"%.3f\" font-size=\"10\">%zu</text>\n",
                      sx(xy[i].first) + 5, sy(xy[i].second) - 5, i);
        out << buf;
    }
    out << "</svg>";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unit-distance graph toolkit"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Seed for every random choice")->capture_default_str();
    int exit_code = 0;

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a named graph");
    std::string gen_kind;
    std::vector<int> gen_params;
    std::string gen_out;
    gen->add_option("kind", gen_kind, "kprime|kdoubleprime|remark|multipartite|complete|cycle|path|petersen")
        ->required();
    gen->add_option("params", gen_params, "Integer parameters");
    gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

    // realize
    auto* realize = app.add_subcommand("realize", "Build an embedding");
    std::string r_graph;
    std::string r_out;
    std::string r_method = "numeric";
    std::string r_mode = "faithful";
    int r_dim = 0;
    SolverFlags r_solver;
    realize->add_option("--graph", r_graph, "Graph JSON (default stdin)");
    realize->add_option("--dim", r_dim, "Ambient dimension");
    realize->add_option("--method", r_method, "colorable|singleton|bipartite|numeric")
        ->check(CLI::IsMember({"colorable", "singleton", "bipartite", "numeric"}));
    realize->add_option("--mode", r_mode, "faithful|distance (numeric method)")
        ->check(CLI::IsMember({"faithful", "distance"}));
    realize->add_option("-o,--output", r_out, "Output file (default stdout)");
    realize->add_option("--seed", seed, "Seed");
    r_solver.add(realize);

    // verify
    auto* ver = app.add_subcommand("verify", "Check an embedding against a graph");
    std::string v_graph;
    std::string v_embedding;
    std::string v_mode = "faithful";
    double v_tol = 1e-7;
    ver->add_option("--graph", v_graph, "Graph JSON (default: the graph carried by the embedding)");
    ver->add_option("--embedding", v_embedding, "Embedding JSON (default stdin)");
    ver->add_option("--mode", v_mode, "faithful|distance")->check(CLI::IsMember({"faithful", "distance"}));
    ver->add_option("--tol", v_tol, "Distance tolerance")->capture_default_str();

    // audit
    auto* aud = app.add_subcommand("audit", "Dimension audit of a bipartite graph");
    std::string a_graph;
    int a_dim = 0;
    bool a_numeric = false;
    SolverFlags a_solver;
    aud->add_option("--graph", a_graph, "Graph JSON (default stdin)");
    aud->add_option("--dim", a_dim, "Queried dimension")->required();
    aud->add_flag("--numeric-fallback", a_numeric, "Try the numeric solver when no construction applies");
    aud->add_option("--seed", seed, "Seed");
    a_solver.add(aud);

    // census
    auto* cen = app.add_subcommand("census", "Count labelled (faithful) distance graphs");
    int c_n = 0;
    int c_dim = 0;
    std::string c_mode = "faithful";
    std::string c_csv;
    udg::CensusOptions c_opts;
    SolverFlags c_solver;
    cen->add_option("--n", c_n, "Vertex count (<= 5)")->required();
    cen->add_option("--dim", c_dim, "Dimension")->required();
    cen->add_option("--mode", c_mode, "faithful|distance")->check(CLI::IsMember({"faithful", "distance"}));
    cen->add_flag("--exact-only", c_opts.exact_only, "Fail unless every graph is decided by an exact oracle");
    cen->add_flag("--cross-check", c_opts.cross_check, "Also run the solver where an exact oracle decided");
    cen->add_option("--csv", c_csv, "Write the per-graph CSV dump here");
    cen->add_option("--seed", seed, "Seed");
    c_solver.add(cen);

    // bound
    auto* bound = app.add_subcommand("bound", "Counting bounds");
    bound->require_subcommand(1);
    auto* zp = bound->add_subcommand("zero-pattern", "Zero-pattern upper bound on faithful graph counts");
    int b_n = 0;
    int b_dim = 0;
    zp->add_option("--n", b_n, "Vertex count")->required();
    zp->add_option("--dim", b_dim, "Dimension")->required();

    // ramsey
    auto* ram = app.add_subcommand("ramsey", "Ramsey calculators");
    ram->require_subcommand(1);
    auto* ram_lower = ram->add_subcommand("lower", "Probabilistic lower bound");
    auto* ram_exact = ram->add_subcommand("exact", "Exhaustive search for small s");
    int rs = 0;
    int r_d = 0;
    int r_max_m = 8;
    for (auto* sub : {ram_lower, ram_exact}) {
        sub->add_option("--s", rs, "Subgraph size")->required();
        sub->add_option("--dim", r_d, "Dimension")->required();
    }
    ram_exact->add_option("--max-m", r_max_m, "Largest m searched (<= 8)")->capture_default_str();
    ram_exact->add_option("--seed", seed, "Seed");
    SolverFlags ram_solver;
    ram_solver.add(ram_exact);

    // plot
    auto* plot = app.add_subcommand("plot", "Render an embedding as SVG");
    std::string p_embedding;
    std::string p_graph;
    std::string p_out;
    plot->add_option("--embedding", p_embedding, "Embedding JSON (default stdin)");
    plot->add_option("--graph", p_graph, "Graph JSON for edges (default: carried by the embedding)");
    plot->add_option("-o,--output", p_out, "SVG file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            write_text(gen_out, udg::graph_to_json(generate(gen_kind, gen_params)).dump());
        } else if (*realize) {
            const udg::Graph g = graph_from_document(read_json(r_graph));
            if (r_method == "colorable" || r_method == "singleton") {
                const udg::Coloring coloring = best_coloring(g);
                udg::Embedding e = r_method == "colorable" ? udg::embed_colorable(g, coloring)
                                                           : udg::embed_singleton_coloring(g, coloring);
                if (r_dim > 0 && r_dim < e.dim) {
                    throw UsageError("coloring construction needs dimension " + std::to_string(e.dim));
                }
                if (r_dim > e.dim) {
                    e = e.padded(r_dim);
                }
                write_text(r_out, udg::embedding_to_text(e, &g));
            } else {
                if (r_dim < 1) {
                    throw UsageError("--dim is required for this method");
                }
                if (r_method == "bipartite") {
                    write_text(r_out, udg::embedding_to_text(udg::embed_bipartite_faithful(g, r_dim, seed), &g));
                } else {
                    const udg::SolveResult res = udg::solve(g, r_dim, parse_mode(r_mode), r_solver.resolve(seed));
                    if (res.status == udg::SolveStatus::found) {
                        write_text(r_out, udg::embedding_to_text(*res.embedding, &g));
                    } else {
                        std::cout << udg::report_to_json(res).dump() << "\n";
                        exit_code = 1;
                    }
                }
            }
        } else if (*ver) {
            const json doc = read_json(v_embedding);
            const udg::Embedding e = udg::embedding_from_json(doc);
            const udg::Graph g = v_graph.empty() ? graph_from_document(doc) : graph_from_document(read_json(v_graph));
            const udg::VerifyReport report = udg::verify(g, e, parse_mode(v_mode), v_tol);
            std::cout << udg::report_to_json(report).dump() << "\n";
            exit_code = report.pass ? 0 : 1;
        } else if (*aud) {
            const udg::Graph g = graph_from_document(read_json(a_graph));
            udg::AuditOptions options;
            options.seed = seed;
            options.numeric_fallback = a_numeric;
            options.solver = a_solver.resolve(seed);
            const udg::AuditReport report = udg::faithful_dim_audit(g, a_dim, options);
            std::cout << udg::report_to_json(report).dump() << "\n";
            exit_code = report.verdict == udg::Verdict::not_realizable ? 1 : 0;
        } else if (*cen) {
            const udg::SolverConfig cfg = c_solver.resolve(seed);
            const udg::CensusReport report = c_mode == "distance" ? udg::count_distance(c_n, c_dim, cfg, c_opts)
                                                                  : udg::count_faithful(c_n, c_dim, cfg, c_opts);
            if (!c_csv.empty()) {
                std::ofstream csv(c_csv);
                if (!csv || !(csv << udg::census_csv(report))) {
                    throw UsageError("cannot write " + c_csv);
                }
            }
            std::cout << udg::report_to_json(report).dump() << "\n";
        } else if (*zp) {
            const udg::ZeroPatternBound b = udg::zero_pattern_bound(b_n, b_dim);
            json j = {{"n", b_n}, {"d", b_dim}, {"applicable", b.applicable}, {"reason", b.reason}};
            j["value"] = b.applicable ? json(udg::to_decimal(b.value)) : json(nullptr);
            std::cout << j.dump() << "\n";
            exit_code = b.applicable ? 0 : 2;
        } else if (*ram_lower) {
            const long long m = udg::ramsey_fd_lower(rs, r_d);
            std::cout << json{{"s", rs}, {"d", r_d}, {"m", m}}.dump() << "\n";
        } else if (*ram_exact) {
            const auto m = udg::ramsey_exact(rs, r_d, r_max_m, ram_solver.resolve(seed));
            json j = {{"s", rs}, {"d", r_d}, {"max_m", r_max_m}};
            j["m"] = m ? json(*m) : json("UNKNOWN");
            std::cout << j.dump() << "\n";
            exit_code = m ? 0 : 1;
        } else if (*plot) {
            const json doc = read_json(p_embedding);
            const udg::Embedding e = udg::embedding_from_json(doc);
            std::optional<udg::Graph> g;
            if (!p_graph.empty()) {
                g = graph_from_document(read_json(p_graph));
            } else if (doc.contains("graph")) {
                g = udg::graph_from_json(doc.at("graph"));
            }
            if (g && g->n() != static_cast<int>(e.points.size())) {
                throw UsageError("graph and embedding sizes differ");
            }
            write_text(p_out, render_svg(e, g));
        }
    } catch (const UsageError& e) {
        std::cerr << "udg: " << e.what() << "\n";
        return 2;
    } catch (const udg::ConstructionFailure& e) {
        std::cerr << "udg: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "udg: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "udg: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
