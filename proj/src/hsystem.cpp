#include "udg/hsystem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "udg/embedding.hpp"
#include "udg/errors.hpp"
#include "udg/rng.hpp"

namespace udg {

HSystem HSystem::from_conditions(int m, std::vector<std::vector<int>> all_conditions) {
    if (m < 0) {
        throw std::invalid_argument("H-system ground set size must be >= 0");
    }
    HSystem h;
    h.m = m;
    for (auto& cond : all_conditions) {
        std::sort(cond.begin(), cond.end());
        if (std::adjacent_find(cond.begin(), cond.end()) != cond.end()) {
            throw std::invalid_argument("H-system condition repeats an index");
        }
        if (!cond.empty() && (cond.front() < 0 || cond.back() >= m)) {
            throw std::invalid_argument("H-system condition index outside [0, m)");
        }
        if (m > 0 && static_cast<int>(cond.size()) == m) {
            ++h.s;
        } else {
            h.conditions.push_back(std::move(cond));
        }
    }
    std::stable_sort(h.conditions.begin(), h.conditions.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return h;
}

std::vector<int> HSystem::sizes() const {
    std::vector<int> out;
    out.reserve(conditions.size());
    for (const auto& c : conditions) {
        out.push_back(static_cast<int>(c.size()));
    }
    return out;
}

double FlatnessBudget::rotation(int growth_index) const { return eps * std::ldexp(1.0, -growth_index - 4); }

std::vector<int> violated_conditions(std::span<const Point> points, const HSystem& h) {
    std::vector<int> bad;
    for (std::size_t l = 0; l < h.conditions.size(); ++l) {
        const auto& cond = h.conditions[l];
        if (cond.empty()) {
            continue;
        }
        std::vector<Point> pts;
        for (const int j : cond) {
            pts.push_back(points[static_cast<std::size_t>(j)]);
        }
        const int base = affine_rank(pts);
        pts.emplace_back();
        for (int i = 0; i < static_cast<int>(points.size()); ++i) {
            if (std::binary_search(cond.begin(), cond.end(), i)) {
                continue;
            }
            pts.back() = points[static_cast<std::size_t>(i)];
            if (affine_rank(pts) != base + 1) {
                bad.push_back(static_cast<int>(l));
                break;
            }
        }
    }
    return bad;
}

double max_chord_tilt(std::span<const Point> points, const Point& pole) {
    double worst = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const Eigen::VectorXd chord = points[i] - points[j];
            const double len = chord.norm();
            if (len > 0.0) {
                worst = std::max(worst, std::asin(std::min(1.0, std::abs(chord.dot(pole)) / len)));
            }
        }
    }
    return worst;
}

namespace {

// m points on S^k within angular radius `cap` of e_0.
std::vector<Point> sample_cap(Rng& rng, int m, int k, double cap) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const double theta = cap * std::pow(uniform(rng, 0.0, 1.0), 1.0 / static_cast<double>(k));
        Point p = Point::Zero(k + 1);
        p(0) = std::cos(theta);
        p.tail(k) = std::sin(theta) * random_unit_vector(rng, k);
        pts.push_back(std::move(p));
    }
    return pts;
}

bool distinct(std::span<const Point> pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if ((pts[i] - pts[j]).norm() <= kTolDistinct) {
                return false;
            }
        }
    }
    return true;
}

bool prefix_holds(std::span<const Point> pts, const HSystem& h, std::size_t upto) {
    HSystem prefix;
    prefix.m = h.m;
    prefix.conditions.assign(h.conditions.begin(), h.conditions.begin() + static_cast<std::ptrdiff_t>(upto));
    return violated_conditions(pts, prefix).empty();
}

}  // namespace

HSystemRealization realize_hsystem(const HSystem& h, const FlatnessBudget& budget, std::uint64_t seed,
                                   int max_retries) {
    for (const auto& cond : h.conditions) {
        if (h.m > 0 && static_cast<int>(cond.size()) >= h.m) {
            throw std::invalid_argument("realize_hsystem: full conditions must be split out");
        }
    }
    const double cap = budget.eps / 4.0;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Rng rng = make_rng(seed, static_cast<std::uint64_t>(attempt));
        int k = 1;
        int growths = 0;
        std::vector<Point> pts = sample_cap(rng, h.m, k, cap);
        bool ok = distinct(pts);
        for (std::size_t l = 0; ok && l < h.conditions.size(); ++l) {
            const auto& cond = h.conditions[l];
            if (static_cast<int>(cond.size()) >= k + 2) {
                const double f = budget.rotation(growths++);
                for (int i = 0; i < h.m; ++i) {
                    const bool member = std::binary_search(cond.begin(), cond.end(), i);
                    Point grown(k + 2);
                    grown.head(k + 1) = std::cos(f) * pts[static_cast<std::size_t>(i)];
                    grown(k + 1) = member ? std::sin(f) : -std::sin(f);
                    pts[static_cast<std::size_t>(i)] = std::move(grown);
                }
                ++k;
                continue;
            }
            int tries = 0;
            while (!prefix_holds(pts, h, l + 1) || !distinct(pts)) {
                if (++tries > max_retries) {
                    ok = false;
                    break;
                }
                pts = sample_cap(rng, h.m, k, cap);
            }
        }
        if (!ok || !violated_conditions(pts, h).empty() || !distinct(pts)) {
            continue;
        }
        Point pole = Point::Zero(k + 1);
        pole(0) = 1.0;
        double diameter = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                diameter = std::max(diameter, (pts[i] - pts[j]).norm());
            }
        }
        if (diameter > budget.eps || max_chord_tilt(pts, pole) >= budget.eps) {
            continue;
        }
        return {k, std::move(pts), std::move(pole)};
    }
    throw ConstructionFailure("realize_hsystem: conditions not met after " + std::to_string(max_retries) +
                              " attempts");
}

}  // namespace udg
