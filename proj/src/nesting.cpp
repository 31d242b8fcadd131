#include "kappatree/nesting.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "kappatree/parallel.hpp"

namespace kappatree {

bool are_nested(const Graph&, const Cut& c, const Cut& d) {
    return !c.vertices.intersects(d.boundary) || !c.star.intersects(d.boundary) ||
           !d.vertices.intersects(c.boundary) || !d.star.intersects(c.boundary);
}

bool are_nested(const CutSystem& sys, std::size_t c, std::size_t d) {
    return are_nested(sys.graph(), sys.cut(c), sys.cut(d));
}

NestingStats mu_stats(const CutSystem& sys) {
    NestingStats stats;
    const std::size_t m = sys.size();
    stats.mu.assign(m, 0);
    std::vector<std::vector<std::size_t>> crossing(m);
    parallel_for(m, [&](std::size_t i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i != j && !are_nested(sys, i, j)) {
                ++stats.mu[i];
                if (i < j) {
                    crossing[i].push_back(j);
                }
            }
        }
    });
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j : crossing[i]) {
            stats.crossing_pairs.emplace_back(i, j);
        }
    }
    if (m > 0) {
        stats.mu_min = *std::min_element(stats.mu.begin(), stats.mu.end());
    }
    return stats;
}

namespace {

NestedSystem make_nested(const CutSystem& sys, std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> picked) {
    NestedSystem out;
    std::vector<std::size_t> ids;
    for (auto& [id, pairs] : picked) {
        ids.push_back(id);
        out.provenance.push_back(std::move(pairs));
    }
    out.system = sys.subsystem(ids);
    out.parent_ids = std::move(ids);
    return out;
}

}  // namespace

NestedSystem optimally_nested_subsystem(const CutSystem& sys, const NestingStats& stats) {
    std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> picked;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        if (stats.mu[i] == stats.mu_min) {
            picked[i];
        }
    }
    return make_nested(sys, std::move(picked));
}

NestedSystem optimally_nested_subsystem(const CutSystem& sys) { return optimally_nested_subsystem(sys, mu_stats(sys)); }

NestedSystem omega_optimal_subsystem(const CutSystem& sys, const NestingStats& stats) {
    std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> picked;
    std::vector<std::pair<std::size_t, std::size_t>> unseparated;
    const auto& omega = sys.omega().members;
    for (std::size_t i = 0; i < omega.size(); ++i) {
        for (std::size_t j = i + 1; j < omega.size(); ++j) {
            std::vector<std::size_t> separating;
            std::size_t best = std::numeric_limits<std::size_t>::max();
            for (const Cut& c : sys.cuts()) {
                if (separates(c, omega[i], omega[j])) {
                    separating.push_back(c.id);
                    best = std::min(best, stats.mu[c.id]);
                }
            }
            if (separating.empty()) {
                unseparated.emplace_back(i, j);
                continue;
            }
            for (std::size_t id : separating) {
                if (stats.mu[id] == best) {
                    picked[id].emplace_back(i, j);
                }
            }
        }
    }
    NestedSystem out = make_nested(sys, std::move(picked));
    out.unseparated_pairs = std::move(unseparated);
    return out;
}

NestedSystem omega_optimal_subsystem(const CutSystem& sys) { return omega_optimal_subsystem(sys, mu_stats(sys)); }

std::size_t straddle_estimate(const CutSystem& sys, std::size_t id) {
    const Cut& c = sys.cut(id);
    std::size_t s = 0;
    for (VertexSet sep : sys.separators()) {
        if (sep.intersects(c.vertices) && sep.intersects(c.star)) {
            ++s;
        }
    }
    return 2 * s;
}

}  // namespace kappatree
