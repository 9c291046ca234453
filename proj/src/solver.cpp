#include "udg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "udg/kernels.hpp"
#include "udg/rng.hpp"

namespace udg {

void SolverConfig::validate() const {
    if (restarts < 1 || max_iters < 1 || jobs < 1) {
        throw std::invalid_argument("solver: restarts, max_iters and jobs must be >= 1");
    }
    if (!(tol_residual > 0.0) || !(init_scale > 0.0)) {
        throw std::invalid_argument("solver: tol_residual and init_scale must be positive");
    }
    if (!(margin_nonedge > 0.0 && margin_nonedge < 0.5)) {
        throw std::invalid_argument("solver: margin_nonedge must lie in (0, 0.5)");
    }
}

double found_tolerance(const SolverConfig& cfg) { return std::max(1e-9, std::sqrt(cfg.tol_residual)); }

namespace {

struct Problem {
    std::size_t n;
    std::size_t d;
    std::vector<std::int32_t> eu;
    std::vector<std::int32_t> ev;
    const kernels::KernelTable* kt;

    Problem(const Graph& g, int dim) : n(static_cast<std::size_t>(g.n())), d(static_cast<std::size_t>(dim)),
                                       kt(&kernels::active()) {
        for (const auto& [u, v] : g.edges()) {
            eu.push_back(u);
            ev.push_back(v);
        }
    }

    double value(const std::vector<double>& x, std::vector<double>* grad) const {
        return kt->edge_objective(x.data(), n, d, eu.data(), ev.data(), eu.size(), grad ? grad->data() : nullptr);
    }
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

std::vector<double> random_start(const Problem& p, double scale, Rng& rng) {
    std::vector<double> x(p.n * p.d);
    for (auto& v : x) {
        v = uniform(rng, -scale / 2.0, scale / 2.0);
    }
    return x;
}

// Gradient descent with Barzilai-Borwein trial steps and Armijo backtracking.
double descend(const Problem& p, std::vector<double>& x, const SolverConfig& cfg) {
    std::vector<double> grad(x.size());
    std::vector<double> trial(x.size());
    std::vector<double> trial_grad(x.size());
    double f = p.value(x, &grad);
    double alpha = 1e-2 / std::max(1.0, std::sqrt(dot(grad, grad)));
    double f_window = f;
    for (int it = 0; it < cfg.max_iters && f > cfg.tol_residual; ++it) {
        const double g2 = dot(grad, grad);
        if (g2 < 1e-30) {
            break;
        }
        bool moved = false;
        for (int bt = 0; bt < 50; ++bt) {
            for (std::size_t i = 0; i < x.size(); ++i) {
                trial[i] = x[i] - alpha * grad[i];
            }
            const double ft = p.value(trial, &trial_grad);
            if (ft <= f - 1e-4 * alpha * g2) {
                double sy = 0.0;
                double ss = 0.0;
                for (std::size_t i = 0; i < x.size(); ++i) {
                    const double si = trial[i] - x[i];
                    sy += si * (trial_grad[i] - grad[i]);
                    ss += si * si;
                }
                x.swap(trial);
                grad.swap(trial_grad);
                f = ft;
                alpha = sy > 0.0 ? std::clamp(ss / sy, 1e-12, 1e3) : alpha * 2.0;
                moved = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!moved) {
            break;
        }
        if (it % 200 == 199) {
            if (f > f_window * (1.0 - 1e-6)) {
                break;
            }
            f_window = f;
        }
    }
    return f;
}

// Minimum-norm Gauss-Newton steps on the edge residuals, kept only while the
// objective decreases.
double polish(const Problem& p, std::vector<double>& x, double f) {
    const std::size_t m = p.eu.size();
    if (m == 0) {
        return f;
    }
    const std::size_t n = p.n;
    Eigen::MatrixXd jac(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n * p.d));
    Eigen::VectorXd r(static_cast<Eigen::Index>(m));
    std::vector<double> trial(x.size());
    for (int it = 0; it < 20 && f > 0.0; ++it) {
        jac.setZero();
        for (std::size_t e = 0; e < m; ++e) {
            const auto u = static_cast<std::size_t>(p.eu[e]);
            const auto v = static_cast<std::size_t>(p.ev[e]);
            double sq = 0.0;
            for (std::size_t c = 0; c < p.d; ++c) {
                const double diff = x[c * n + u] - x[c * n + v];
                sq += diff * diff;
                jac(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(c * n + u)) = 2.0 * diff;
                jac(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(c * n + v)) = -2.0 * diff;
            }
            r(static_cast<Eigen::Index>(e)) = sq - 1.0;
        }
        const Eigen::VectorXd step = jac.completeOrthogonalDecomposition().solve(-r);
        for (std::size_t i = 0; i < x.size(); ++i) {
            trial[i] = x[i] + step(static_cast<Eigen::Index>(i));
        }
        const double ft = p.value(trial, nullptr);
        if (!(ft < f)) {
            break;
        }
        x.swap(trial);
        f = ft;
    }
    return f;
}

Embedding to_embedding(const Problem& p, const std::vector<double>& x) {
    Embedding e{static_cast<int>(p.d), {}};
    for (std::size_t i = 0; i < p.n; ++i) {
        Point pt(static_cast<Eigen::Index>(p.d));
        for (std::size_t c = 0; c < p.d; ++c) {
            pt(static_cast<Eigen::Index>(c)) = x[c * p.n + i];
        }
        e.points.push_back(std::move(pt));
    }
    return e;
}

struct Outcome {
    double residual = std::numeric_limits<double>::infinity();
    bool converged = false;
    std::optional<Embedding> accepted;
};

Outcome run_restart(const Problem& p, const Graph& g, Mode mode, const SolverConfig& cfg, int index) {
    Rng rng = make_rng(cfg.seed, static_cast<std::uint64_t>(index));
    std::vector<double> x = random_start(p, cfg.init_scale, rng);
    double f = descend(p, x, cfg);
    if (f < 1e-6) {
        f = polish(p, x, f);
    }
    Outcome out;
    out.residual = f;
    out.converged = f <= cfg.tol_residual;
    if (!out.converged) {
        return out;
    }
    Embedding e = to_embedding(p, x);
    const VerifyReport report = verify(g, e, mode, found_tolerance(cfg));
    const bool separated = report.min_pair_distance >= cfg.margin_nonedge;
    const bool clear = mode == Mode::distance || report.min_nonedge_gap >= cfg.margin_nonedge;
    if (report.pass && separated && clear) {
        out.accepted = std::move(e);
    }
    return out;
}

}  // namespace

SolveResult solve(const Graph& g, int d, Mode mode, const SolverConfig& cfg) {
    cfg.validate();
    if (g.n() < 1 || d < 1) {
        throw std::invalid_argument("solver: need n >= 1 and d >= 1");
    }
    const Problem p(g, d);
    SolveResult result;
    result.best_residual = std::numeric_limits<double>::infinity();
    std::vector<Outcome> batch;
    for (int start = 0; start < cfg.restarts; start += cfg.jobs) {
        const int count = std::min(cfg.jobs, cfg.restarts - start);
        batch.assign(static_cast<std::size_t>(count), Outcome{});
        if (count == 1) {
            batch[0] = run_restart(p, g, mode, cfg, start);
        } else {
            std::vector<std::thread> workers;
            for (int t = 0; t < count; ++t) {
                workers.emplace_back([&, t] { batch[static_cast<std::size_t>(t)] = run_restart(p, g, mode, cfg, start + t); });
            }
            for (auto& w : workers) {
                w.join();
            }
        }
        for (int t = 0; t < count; ++t) {
            auto& o = batch[static_cast<std::size_t>(t)];
            result.best_residual = std::min(result.best_residual, o.residual);
            result.restarts_used = start + t + 1;
            if (o.accepted) {
                result.status = SolveStatus::found;
                result.embedding = std::move(o.accepted);
                return result;
            }
            if (o.converged) {
                ++result.rejected;
            }
        }
    }
    return result;
}

SolveResult solve_faithful(const Graph& g, int d, const SolverConfig& cfg) { return solve(g, d, Mode::faithful, cfg); }

SolveResult solve_distance(const Graph& g, int d, const SolverConfig& cfg) { return solve(g, d, Mode::distance, cfg); }

double gradient_check(const Graph& g, int d, std::uint64_t seed) {
    const Problem p(g, d);
    Rng rng = make_rng(seed, 0);
    std::vector<double> x = random_start(p, 2.0, rng);
    std::vector<double> grad(x.size());
    p.value(x, &grad);
    const double h = 1e-6;
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double keep = x[i];
        x[i] = keep + h;
        const double up = p.value(x, nullptr);
        x[i] = keep - h;
        const double down = p.value(x, nullptr);
        x[i] = keep;
        const double fd = (up - down) / (2.0 * h);
        worst = std::max(worst, std::abs(grad[i] - fd) / std::max({1.0, std::abs(grad[i]), std::abs(fd)}));
    }
    return worst;
}

const char* to_string(SolveStatus status) { return status == SolveStatus::found ? "FOUND" : "NOT_FOUND"; }

}  // namespace udg
