#include "kappatree/cut_system.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "kappatree/nesting.hpp"

namespace kappatree {

Cut make_cut(const Graph& g, VertexSet vertices) {
    Cut c;
    c.vertices = vertices;
    c.boundary = boundary(g, vertices);
    c.star = g.vertices() - vertices - c.boundary;
    return c;
}

CutSystem::CutSystem(Graph graph, std::size_t kappa, OmegaFamily omega, std::vector<VertexSet> cut_sets)
    : graph_(std::move(graph)), kappa_(kappa), omega_(std::move(omega)) {
    std::sort(cut_sets.begin(), cut_sets.end());
    cut_sets.erase(std::unique(cut_sets.begin(), cut_sets.end()), cut_sets.end());
    cuts_.reserve(cut_sets.size());
    for (VertexSet s : cut_sets) {
        Cut c = make_cut(graph_, s);
        c.id = cuts_.size();
        separators_.push_back(c.boundary);
        cuts_.push_back(c);
    }
    std::sort(separators_.begin(), separators_.end());
    separators_.erase(std::unique(separators_.begin(), separators_.end()), separators_.end());
}

std::optional<std::size_t> CutSystem::find(VertexSet vertices) const {
    auto it = std::lower_bound(cuts_.begin(), cuts_.end(), vertices,
                               [](const Cut& c, VertexSet v) { return c.vertices < v; });
    if (it == cuts_.end() || it->vertices != vertices) {
        return std::nullopt;
    }
    return it->id;
}

bool CutSystem::has_cut_within(VertexSet region) const {
    return std::any_of(cuts_.begin(), cuts_.end(), [region](const Cut& c) { return c.vertices.subset_of(region); });
}

VertexSet CutSystem::vertices_of(PreCut p) const {
    const Cut& c = cuts_[p.cut];
    return p.side == PreCut::Side::kCut ? c.vertices : c.star;
}

CutSystem CutSystem::subsystem(std::span<const std::size_t> ids) const {
    std::vector<VertexSet> sets;
    sets.reserve(ids.size());
    for (std::size_t id : ids) {
        sets.push_back(cuts_[id].vertices);
    }
    return CutSystem(graph_, kappa_, omega_, std::move(sets));
}

bool separates(const Cut& c, VertexSet a, VertexSet b) {
    if (a.subset_of(c.boundary) || b.subset_of(c.boundary)) {
        return false;
    }
    const VertexSet near = c.vertices | c.boundary;
    const VertexSet far = c.star | c.boundary;
    return (a.subset_of(near) && b.subset_of(far)) || (b.subset_of(near) && a.subset_of(far));
}

namespace {

bool separates_some_pair(const Cut& c, const OmegaFamily& omega) {
    const auto& m = omega.members;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (separates(c, m[i], m[j])) {
                return true;
            }
        }
    }
    return false;
}

void collect_cuts_at(const Graph& g, VertexSet s, const OmegaFamily& omega, std::vector<VertexSet>& out) {
    for (VertexSet comp : components(g, g.vertices() - s)) {
        if (boundary(g, comp) != s) {
            continue;
        }
        if (separates_some_pair(make_cut(g, comp), omega)) {
            out.push_back(comp);
        }
    }
}

}  // namespace

CutSystem enumerate_cuts(const Graph& g, std::size_t kappa, const OmegaFamily& omega, EnumerationStrategy strategy) {
    std::vector<VertexSet> found;
    if (omega.members.size() >= 2 && kappa > 0) {
        if (strategy == EnumerationStrategy::kAllSubsets) {
            for_each_subset_of_size(g.vertices(), kappa, [&](VertexSet s) { collect_cuts_at(g, s, omega, found); });
        } else {
            std::set<VertexSet> candidates;
            const auto& m = omega.members;
            for (std::size_t i = 0; i < m.size(); ++i) {
                for (std::size_t j = i + 1; j < m.size(); ++j) {
                    for (VertexIndex x : m[i]) {
                        for (VertexIndex y : m[j]) {
                            if (x == y || g.adjacent(x, y)) {
                                continue;
                            }
                            for (VertexSet s : enumerate_tight_separators(g, x, y, kappa)) {
                                candidates.insert(s);
                            }
                        }
                    }
                }
            }
            for (VertexSet s : candidates) {
                collect_cuts_at(g, s, omega, found);
            }
        }
    }
    return CutSystem(g, kappa, omega, std::move(found));
}

CutSystem build_cut_system(const Graph& g, EnumerationStrategy strategy) {
    auto k = compute_kappa(g);
    if (!k) {
        return CutSystem(g, 0, OmegaFamily{}, {});
    }
    return enumerate_cuts(g, k->kappa, k->omega, strategy);
}

AxiomReport verify_axioms(const CutSystem& sys) {
    AxiomReport report;
    const Graph& g = sys.graph();
    auto record = [&report](AxiomViolation v) {
        const bool seen = std::any_of(report.violations.begin(), report.violations.end(),
                                      [&](const AxiomViolation& o) { return o.kind == v.kind; });
        if (!seen) {
            report.violations.push_back(std::move(v));
        }
    };
    for (const Cut& c : sys.cuts()) {
        for (const Cut& d : sys.cuts()) {
            if (d.id < c.id) {
                continue;
            }
            ++report.pairs_checked;
            const CornerDecomposition cd = corner_decomposition(g, c.vertices, d.vertices);
            // Opposite corner pairs: (C∩D, C*∩D*) and (C∩D*, C*∩D).
            const std::array<std::array<VertexSet, 2>, 2> opposite{{{cd.c_d, cd.cstar_dstar}, {cd.c_dstar, cd.cstar_d}}};
            bool a2 = false;
            for (const auto& pair : opposite) {
                if (!sys.has_cut_within(pair[0]) || !sys.has_cut_within(pair[1])) {
                    continue;
                }
                a2 = true;
                for (VertexSet corner : pair) {
                    for (VertexSet comp : components(g, corner)) {
                        if (sys.has_cut_within(comp) && !sys.contains(comp)) {
                            report.a1 = false;
                            record({AxiomViolation::Kind::kA1, c.id, d.id, comp,
                                    "corner component " + format_set(g, comp) + " contains a cut but is not one"});
                        }
                    }
                }
            }
            const bool a2_prime = sys.has_cut_within(c.vertices - d.boundary) && sys.has_cut_within(c.star - d.boundary) &&
                                  sys.has_cut_within(d.vertices - c.boundary) && sys.has_cut_within(d.star - c.boundary);
            if (!a2) {
                report.a2 = false;
                record({AxiomViolation::Kind::kA2, c.id, d.id, {}, "no pair of opposite corners both contain a cut"});
            }
            if (!a2_prime) {
                report.a2_prime = false;
            }
            if (a2 != a2_prime) {
                report.a2_equivalent = false;
                record({AxiomViolation::Kind::kA2PrimeMismatch, c.id, d.id, {}, "A2 and A2' disagree"});
            }
        }
    }
    return report;
}

std::vector<std::size_t> cut_components(const CutSystem& sys, VertexSet region) {
    std::vector<std::size_t> out;
    for (VertexSet comp : components(sys.graph(), region)) {
        if (auto id = sys.find(comp)) {
            out.push_back(*id);
        }
    }
    return out;
}

CutClass classify_cut(const CutSystem& sys, std::size_t id) {
    CutClass out;
    out.is_a = true;
    for (const Cut& d : sys.cuts()) {
        if (d.id != id && !are_nested(sys, id, d.id)) {
            out.is_a = false;
            break;
        }
    }
    out.is_b = cut_components(sys, sys.cut(id).star).size() == 1;
    return out;
}

std::vector<Slice> find_slices(const CutSystem& sys) {
    const Graph& g = sys.graph();
    std::vector<Slice> out;
    for (VertexSet s : sys.separators()) {
        for (VertexSet comp : components(g, g.vertices() - s)) {
            if (sys.contains(comp)) {
                continue;
            }
            const bool dup = std::any_of(out.begin(), out.end(), [comp](const Slice& q) { return q.vertices == comp; });
            if (!dup) {
                out.push_back({comp, s});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Slice& a, const Slice& b) { return a.vertices < b.vertices; });
    return out;
}

VertexSet HatGraph::to_original(VertexSet hat_set) const {
    VertexSet out;
    for (VertexIndex v : hat_set) {
        out.insert(kept[v]);
    }
    return out;
}

VertexSet HatGraph::to_hat(VertexSet original) const {
    VertexSet out;
    for (VertexIndex i = 0; i < kept.size(); ++i) {
        if (original.contains(kept[i])) {
            out.insert(i);
        }
    }
    return out;
}

HatGraph hat_graph(const CutSystem& sys) {
    const Graph& g = sys.graph();
    const std::vector<Slice> slices = find_slices(sys);
    VertexSet removed;
    for (const Slice& q : slices) {
        removed |= q.vertices;
    }
    const VertexSet keep = g.vertices() - removed;

    std::vector<std::pair<std::string, std::string>> extra;
    for (const Slice& q : slices) {
        const VertexSet nq = boundary(g, q.vertices);
        for (VertexIndex u : nq) {
            for (VertexIndex v : nq) {
                if (u < v) {
                    extra.emplace_back(g.label(u), g.label(v));
                }
            }
        }
    }

    HatGraph hat;
    hat.graph = g.induced(keep).with_edges(extra);
    hat.kept.assign(keep.begin(), keep.end());

    OmegaFamily omega{sys.omega().k, {}};
    for (VertexSet w : sys.omega().members) {
        omega.members.push_back(hat.to_hat(w));
    }
    std::vector<VertexSet> lifted;
    lifted.reserve(sys.size());
    for (const Cut& c : sys.cuts()) {
        lifted.push_back(hat.to_hat(c.vertices));
    }
    hat.lifted = CutSystem(hat.graph, sys.kappa(), std::move(omega), lifted);
    hat.lift.reserve(sys.size());
    for (VertexSet l : lifted) {
        hat.lift.push_back(hat.lifted.find(l).value());
    }
    return hat;
}

namespace {

// Interior vertices of a shortest x-y path in G - removed, or nullopt when none exists.
std::optional<std::vector<VertexIndex>> shortest_path_interior(const Graph& g, VertexSet removed, VertexIndex x,
                                                                VertexIndex y) {
    const VertexSet allowed = g.vertices() - removed;
    std::vector<VertexIndex> parent(g.size(), static_cast<VertexIndex>(g.size()));
    VertexSet seen = VertexSet::single(x);
    std::vector<VertexIndex> frontier{x};
    while (!frontier.empty() && !seen.contains(y)) {
        std::vector<VertexIndex> next;
        for (VertexIndex u : frontier) {
            for (VertexIndex v : g.neighbours(u) & allowed) {
                if (!seen.contains(v)) {
                    seen.insert(v);
                    parent[v] = u;
                    next.push_back(v);
                }
            }
        }
        frontier = std::move(next);
    }
    if (!seen.contains(y)) {
        return std::nullopt;
    }
    std::vector<VertexIndex> interior;
    for (VertexIndex v = parent[y]; v != x; v = parent[v]) {
        interior.push_back(v);
    }
    return interior;
}

}  // namespace

std::vector<VertexSet> enumerate_tight_separators(const Graph& g, VertexIndex x, VertexIndex y, std::size_t k) {
    if (x == y) {
        throw GraphError("enumerate_tight_separators needs two distinct vertices");
    }
    std::set<VertexSet> found;
    if (g.adjacent(x, y)) {
        return {};
    }
    // A tight separator is a minimal x-y separator, so each of its proper subsets leaves some
    // x-y path, and every such path meets the rest of the separator: branching on the interior
    // of one shortest path reaches it.
    std::set<VertexSet> visited;
    std::function<void(VertexSet)> grow = [&](VertexSet removed) {
        if (!visited.insert(removed).second) {
            return;
        }
        auto path = shortest_path_interior(g, removed, x, y);
        if (!path) {
            if (removed.size() == k) {
                found.insert(removed);
            }
            return;
        }
        if (removed.size() == k) {
            return;
        }
        for (VertexIndex z : *path) {
            grow(removed | VertexSet::single(z));
        }
    };
    grow({});

    std::vector<VertexSet> out;
    for (VertexSet s : found) {
        const VertexSet rest = g.vertices() - s;
        const VertexSet a = component_of(g, rest, x);
        const VertexSet b = component_of(g, rest, y);
        if (a != b && boundary(g, a) == s && boundary(g, b) == s) {
            out.push_back(s);
        }
    }
    return out;
}

}  // namespace kappatree
