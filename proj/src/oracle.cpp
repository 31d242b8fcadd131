#include "kappatree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>

#include "kappatree/decomposition.hpp"
#include "kappatree/nesting.hpp"

namespace kappatree::oracle {

namespace {

using Mask = std::uint64_t;

struct Adjacency {
    std::size_t n = 0;
    std::vector<Mask> nbr;
    Mask all = 0;

    explicit Adjacency(const Graph& g) : n(g.size()), nbr(g.size(), 0) {
        for (VertexIndex u = 0; u < n; ++u) {
            all |= Mask{1} << u;
            for (VertexIndex v = 0; v < n; ++v) {
                if (u != v && g.adjacent(u, v)) {
                    nbr[u] |= Mask{1} << v;
                }
            }
        }
    }

    Mask boundary(Mask c) const {
        Mask out = 0;
        for (VertexIndex v = 0; v < n; ++v) {
            if ((c >> v) & 1U) {
                out |= nbr[v];
            }
        }
        return out & ~c;
    }
    Mask star(Mask c) const { return all & ~c & ~boundary(c); }

    std::vector<Mask> components(Mask region) const {
        std::vector<Mask> out;
        Mask left = region;
        for (VertexIndex s = 0; s < n; ++s) {
            if (!((left >> s) & 1U)) {
                continue;
            }
            Mask comp = Mask{1} << s;
            std::deque<VertexIndex> queue{s};
            while (!queue.empty()) {
                const VertexIndex v = queue.front();
                queue.pop_front();
                for (VertexIndex w = 0; w < n; ++w) {
                    const Mask bit = Mask{1} << w;
                    if ((nbr[v] & bit) && (region & bit) && !(comp & bit)) {
                        comp |= bit;
                        queue.push_back(w);
                    }
                }
            }
            left &= ~comp;
            out.push_back(comp);
        }
        return out;
    }
};

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

void check_budget(const Graph& g, std::size_t k, const Budget& budget) {
    if (g.size() > budget.max_vertices) {
        throw BudgetExceeded("graph has " + std::to_string(g.size()) + " vertices; oracle budget is " +
                             std::to_string(budget.max_vertices));
    }
    if (k > budget.max_subset_size) {
        throw BudgetExceeded("subset size " + std::to_string(k) + " exceeds oracle budget");
    }
}

/// The pairs (C ∪ NC, C* ∪ NC) over all C with |NC| <= k, deduplicated.
std::vector<std::pair<Mask, Mask>> separations(const Adjacency& adj, std::size_t k, bool exact) {
    std::vector<std::pair<Mask, Mask>> out;
    for (Mask c = 1; c <= adj.all; ++c) {
        const Mask nc = adj.boundary(c);
        const std::size_t size = popcount(nc);
        if (exact ? size != k : size > k) {
            continue;
        }
        const Mask s = adj.star(c);
        out.emplace_back(c | nc, s | nc);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool survives(Mask y, const std::vector<std::pair<Mask, Mask>>& seps) {
    return std::all_of(seps.begin(), seps.end(),
                       [y](const auto& p) { return subset(y, p.first) || subset(y, p.second); });
}

std::vector<Mask> maximal_sets(const Adjacency& adj, std::size_t k) {
    const auto seps = separations(adj, k, false);
    std::vector<Mask> insep;
    for (Mask y = 1; y <= adj.all; ++y) {
        if (popcount(y) > k && survives(y, seps)) {
            insep.push_back(y);
        }
    }
    std::vector<Mask> out;
    for (Mask y : insep) {
        bool maximal = true;
        for (VertexIndex v = 0; v < adj.n && maximal; ++v) {
            const Mask bigger = y | (Mask{1} << v);
            if (bigger != y && std::binary_search(insep.begin(), insep.end(), bigger)) {
                maximal = false;
            }
        }
        if (maximal) {
            out.push_back(y);
        }
    }
    return out;
}

std::vector<VertexSet> to_sets(std::vector<Mask> masks) {
    std::vector<VertexSet> out;
    for (Mask m : masks) {
        out.emplace_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool separates_pair(Mask closed, Mask star_closed, Mask nc, Mask a, Mask b) {
    if (subset(a, nc) || subset(b, nc)) {
        return false;
    }
    return (subset(a, closed) && subset(b, star_closed)) || (subset(b, closed) && subset(a, star_closed));
}

}  // namespace

bool inseparable(const Graph& g, VertexSet y, std::size_t k, const Budget& budget) {
    check_budget(g, k, budget);
    if (y.size() <= k) {
        return false;
    }
    const Adjacency adj(g);
    for (Mask c = 1; c <= adj.all; ++c) {
        const Mask nc = adj.boundary(c);
        if (popcount(nc) > k) {
            continue;
        }
        if (!subset(y.bits(), c | nc) && !subset(y.bits(), adj.star(c) | nc)) {
            return false;
        }
    }
    return true;
}

std::vector<VertexSet> maximal_inseparable_sets(const Graph& g, std::size_t k, const Budget& budget) {
    check_budget(g, k, budget);
    return to_sets(maximal_sets(Adjacency(g), k));
}

std::optional<std::size_t> kappa(const Graph& g, const Budget& budget) {
    check_budget(g, 0, budget);
    const Adjacency adj(g);
    for (std::size_t k = 1; k + 2 <= adj.n; ++k) {
        if (k > budget.max_subset_size) {
            throw BudgetExceeded("subset size " + std::to_string(k) + " exceeds oracle budget");
        }
        const std::vector<Mask> omega = maximal_sets(adj, k);
        for (const auto& [closed, star_closed] : separations(adj, k, true)) {
            const Mask nc = closed & star_closed;
            for (std::size_t i = 0; i < omega.size(); ++i) {
                for (std::size_t j = i + 1; j < omega.size(); ++j) {
                    if (separates_pair(closed, star_closed, nc, omega[i], omega[j])) {
                        return k;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

bool nested(const CutSystem& sys, std::size_t c, std::size_t d, const Budget& budget) {
    check_budget(sys.graph(), 0, budget);
    const Adjacency adj(sys.graph());
    const Mask cc = sys.cut(c).vertices.bits();
    const Mask dd = sys.cut(d).vertices.bits();
    const Mask nc = adj.boundary(cc);
    const Mask nd = adj.boundary(dd);
    const Mask cs = adj.star(cc);
    const Mask ds = adj.star(dd);

    struct Corner {
        Mask corner;
        Mask link1;
        Mask link2;
    };
    const Corner corners[] = {
        {cc & dd, cc & nd, dd & nc},
        {cc & ds, cc & nd, ds & nc},
        {cs & dd, cs & nd, dd & nc},
        {cs & ds, cs & nd, ds & nc},
    };
    for (const Corner& k : corners) {
        if (k.link1 != 0 || k.link2 != 0) {
            continue;
        }
        const bool holds_cut = std::any_of(sys.cuts().begin(), sys.cuts().end(),
                                           [&](const Cut& e) { return subset(e.vertices.bits(), k.corner); });
        if (!holds_cut) {
            return true;
        }
    }
    return false;
}

std::vector<VertexSet> cuts(const Graph& g, std::size_t kappa, const std::vector<VertexSet>& omega,
                            const Budget& budget) {
    check_budget(g, kappa, budget);
    const Adjacency adj(g);
    std::vector<Mask> out;
    for (Mask s = 0; s <= adj.all; ++s) {
        if (popcount(s) != kappa) {
            continue;
        }
        for (Mask c : adj.components(adj.all & ~s)) {
            if (adj.boundary(c) != s || adj.star(adj.star(c)) != c) {
                continue;
            }
            const Mask closed = c | s;
            const Mask star_closed = adj.star(c) | s;
            bool separating = false;
            for (std::size_t i = 0; i < omega.size() && !separating; ++i) {
                for (std::size_t j = i + 1; j < omega.size() && !separating; ++j) {
                    separating = separates_pair(closed, star_closed, s, omega[i].bits(), omega[j].bits());
                }
            }
            if (separating) {
                out.push_back(c);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return to_sets(std::move(out));
}

Certificate certify(const Graph& g, const Budget& budget) {
    Certificate cert;
    const Analysis a = analyze(g);
    cert.axioms = verify_axioms(a.system);
    const TreeReport tree = validate_tree(a.tree, a.kappa.value_or(0));
    cert.tree_valid = tree.passed();
    for (const std::string& p : tree.problems) {
        cert.problems.push_back("tree: " + p);
    }
    for (const AxiomViolation& v : cert.axioms.violations) {
        cert.problems.push_back("axioms: " + v.detail);
    }
    if (g.size() > budget.max_vertices) {
        return cert;
    }
    cert.oracle_run = true;

    const std::optional<std::size_t> k = kappa(g, budget);
    cert.kappa_agrees = k == a.kappa;
    if (!cert.kappa_agrees) {
        cert.problems.push_back("oracle: kappa differs");
        return cert;
    }
    if (!k) {
        return cert;
    }
    const std::vector<VertexSet> omega = maximal_inseparable_sets(g, *k, budget);
    cert.omega_agrees = omega == a.omega.members;
    if (!cert.omega_agrees) {
        cert.problems.push_back("oracle: maximal inseparable sets differ");
    }
    std::vector<VertexSet> fast;
    for (const Cut& c : a.system.cuts()) {
        fast.push_back(c.vertices);
    }
    cert.cuts_agree = cuts(g, *k, omega, budget) == fast;
    if (!cert.cuts_agree) {
        cert.problems.push_back("oracle: cut system differs");
    }
    for (std::size_t i = 0; i < a.system.size(); ++i) {
        for (std::size_t j = 0; j < a.system.size(); ++j) {
            ++cert.nested_pairs_checked;
            if (are_nested(a.system, i, j) != nested(a.system, i, j, budget)) {
                cert.nesting_agrees = false;
                cert.problems.push_back("oracle: nestedness differs for cuts " + format_set(g, a.system.cut(i).vertices) +
                                        " and " + format_set(g, a.system.cut(j).vertices));
            }
        }
    }
    return cert;
}

}  // namespace kappatree::oracle
