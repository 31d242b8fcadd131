#include "kappatree/structure_tree.hpp"

#include <algorithm>
#include <numeric>

namespace kappatree {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

bool related(const CutSystem& sys, const Cut& c, const Cut& d) {
    if (!c.star.proper_subset_of(d.vertices)) {
        return false;
    }
    return std::none_of(sys.cuts().begin(), sys.cuts().end(), [&](const Cut& e) {
        return c.star.proper_subset_of(e.vertices) && e.vertices.proper_subset_of(d.vertices);
    });
}

}  // namespace

std::vector<EquivClass> equivalence_classes(const CutSystem& hat_sys) {
    const std::size_t m = hat_sys.size();
    std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
    UnionFind uf(m);
    for (const Cut& c : hat_sys.cuts()) {
        rel[c.id][c.id] = true;
        for (const Cut& d : hat_sys.cuts()) {
            if (c.id != d.id && related(hat_sys, c, d)) {
                rel[c.id][d.id] = true;
                uf.unite(c.id, d.id);
            }
        }
    }
    std::map<std::size_t, EquivClass> by_root;
    for (std::size_t i = 0; i < m; ++i) {
        by_root[uf.find(i)].members.push_back(i);
    }
    std::vector<EquivClass> out;
    for (auto& [root, cls] : by_root) {
        for (std::size_t a : cls.members) {
            for (std::size_t b : cls.members) {
                if (!rel[a][b]) {
                    throw InvariantViolation("~ is not an equivalence relation on cuts " + std::to_string(a) + " and " +
                                             std::to_string(b) + "; the system is not nested or has slices");
                }
            }
        }
        cls.block = block_of_class(hat_sys, cls);
        out.push_back(std::move(cls));
    }
    return out;
}

VertexSet block_of_class(const CutSystem& hat_sys, const EquivClass& b) {
    VertexSet block = hat_sys.graph().vertices();
    for (std::size_t id : b.members) {
        const Cut& c = hat_sys.cut(id);
        block &= c.vertices | c.boundary;
    }
    return block;
}

std::vector<std::size_t> StructureTree::blocks_at(std::size_t separator) const {
    std::vector<std::size_t> out;
    for (const TreeEdge& e : edges) {
        if (e.separator == separator) {
            out.push_back(e.block);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::size_t> StructureTree::separators_at(std::size_t block) const {
    std::vector<std::size_t> out;
    for (const TreeEdge& e : edges) {
        if (e.block == block) {
            out.push_back(e.separator);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

StructureTree trivial_tree(const Graph& g) {
    StructureTree t;
    t.graph = g;
    t.system = CutSystem(g, 0, OmegaFamily{}, {});
    t.hat = hat_graph(t.system);
    t.blocks.push_back({{}, g.vertices()});
    return t;
}

StructureTree build_tree(const CutSystem& nested) {
    if (nested.empty()) {
        StructureTree t = trivial_tree(nested.graph());
        t.system = nested;
        return t;
    }
    StructureTree t;
    t.graph = nested.graph();
    t.kappa = nested.kappa();
    t.system = nested;
    t.slices = find_slices(nested);
    t.hat = hat_graph(nested);
    t.separators = nested.separators();

    // Hat ids -> tree system ids.
    std::vector<std::size_t> unlift(nested.size());
    for (std::size_t id = 0; id < nested.size(); ++id) {
        unlift[t.hat.lift[id]] = id;
    }
    std::vector<EquivClass> classes = equivalence_classes(t.hat.lifted);
    for (EquivClass& cls : classes) {
        BlockNode node;
        for (std::size_t hat_id : cls.members) {
            node.cuts.push_back(unlift[hat_id]);
        }
        std::sort(node.cuts.begin(), node.cuts.end());
        node.vertices = t.hat.to_original(cls.block);
        t.blocks.push_back(std::move(node));
    }
    std::sort(t.blocks.begin(), t.blocks.end(),
              [](const BlockNode& a, const BlockNode& b) { return a.cuts.front() < b.cuts.front(); });

    t.block_of_cut.assign(nested.size(), 0);
    for (std::size_t b = 0; b < t.blocks.size(); ++b) {
        for (std::size_t id : t.blocks[b].cuts) {
            t.block_of_cut[id] = b;
        }
    }
    for (const Cut& c : nested.cuts()) {
        const auto sep = std::lower_bound(t.separators.begin(), t.separators.end(), c.boundary);
        t.edges.push_back({c.id, static_cast<std::size_t>(sep - t.separators.begin()), t.block_of_cut[c.id]});
    }

    const TreeReport report = validate_tree(t, t.kappa);
    if (!report.passed()) {
        throw InvariantViolation("structure tree validation failed: " + report.problems.front());
    }
    return t;
}

StructureTree build_tree(const NestedSystem& nested) { return build_tree(nested.system); }

TreeReport validate_tree(const StructureTree& t, std::size_t kappa) {
    TreeReport report;
    auto problem = [&report](std::string s) { report.problems.push_back(std::move(s)); };
    const Graph& g = t.graph;
    const std::size_t seps = t.separators.size();
    const std::size_t nodes = t.node_count();

    if (t.edges.size() + 1 != nodes) {
        problem("edge count " + std::to_string(t.edges.size()) + " does not equal node count - 1 (" +
                std::to_string(nodes) + " nodes)");
    }
    std::vector<std::size_t> degree(nodes, 0);
    UnionFind uf(nodes);
    for (const TreeEdge& e : t.edges) {
        if (e.separator >= seps || e.block >= t.blocks.size()) {
            problem("edge of cut " + std::to_string(e.cut) + " does not join a separator to a block");
            continue;
        }
        ++degree[e.separator];
        ++degree[seps + e.block];
        if (!uf.unite(e.separator, seps + e.block)) {
            problem("cycle through cut " + std::to_string(e.cut));
        }
    }
    for (std::size_t v = 1; v < nodes; ++v) {
        if (uf.find(v) != uf.find(0)) {
            problem("tree is not connected");
            break;
        }
    }
    if (t.trivial()) {
        return report;
    }

    for (std::size_t b = 0; b < t.blocks.size(); ++b) {
        const VertexSet block = t.blocks[b].vertices;
        if (block.size() < kappa + 1) {
            problem("block " + format_set(g, block) + " has fewer than kappa + 1 vertices");
        }
        std::vector<VertexSet> bounds;
        for (std::size_t id : t.blocks[b].cuts) {
            bounds.push_back(t.system.cut(id).boundary);
        }
        std::sort(bounds.begin(), bounds.end());
        if (std::adjacent_find(bounds.begin(), bounds.end()) != bounds.end()) {
            problem("block " + format_set(g, block) + " has parallel edges");
        }
    }
    for (std::size_t s = 0; s < seps; ++s) {
        if (degree[s] == 1) {
            problem("separator " + format_set(g, t.separators[s]) + " is a leaf");
        }
        const std::vector<std::size_t> at = t.blocks_at(s);
        for (std::size_t b = 0; b < t.blocks.size(); ++b) {
            const bool adjacent = std::binary_search(at.begin(), at.end(), b);
            if (adjacent != t.separators[s].subset_of(t.blocks[b].vertices)) {
                problem("separator " + format_set(g, t.separators[s]) + " and block " +
                        format_set(g, t.blocks[b].vertices) + " break the adjacency law");
            }
        }
    }
    for (std::size_t b = 0; b < t.blocks.size(); ++b) {
        if (degree[seps + b] != 1) {
            continue;
        }
        report.leaves.push_back(b);
        const std::size_t s = t.separators_at(b).front();
        const VertexSet rest = t.hat.to_hat(t.blocks[b].vertices - t.separators[s]);
        if (!t.hat.lifted.contains(rest)) {
            problem("leaf block " + format_set(g, t.blocks[b].vertices) + " minus its separator is not a cut");
        }
    }
    return report;
}

Permutation permutation_from_labels(const Graph& g, const std::map<std::string, std::string>& moves) {
    Permutation pi(g.size());
    std::iota(pi.begin(), pi.end(), 0);
    for (const auto& [from, to] : moves) {
        pi[g.index_of(from)] = g.index_of(to);
    }
    return pi;
}

bool is_automorphism(const Graph& g, const Permutation& pi) {
    if (pi.size() != g.size()) {
        return false;
    }
    VertexSet image;
    for (VertexIndex v : pi) {
        if (v >= g.size()) {
            return false;
        }
        image.insert(v);
    }
    if (image != g.vertices()) {
        return false;
    }
    for (auto [u, v] : g.edges()) {
        if (!g.adjacent(pi[u], pi[v])) {
            return false;
        }
    }
    return true;
}

bool check_invariance(const CutSystem& nested, const Permutation& pi) {
    if (!is_automorphism(nested.graph(), pi)) {
        throw GraphError("permutation is not an automorphism of the graph");
    }
    return std::all_of(nested.cuts().begin(), nested.cuts().end(), [&](const Cut& c) {
        VertexSet image;
        for (VertexIndex v : c.vertices) {
            image.insert(pi[v]);
        }
        return nested.contains(image);
    });
}

bool check_invariance(const StructureTree& t, const Permutation& pi) { return check_invariance(t.system, pi); }

}  // namespace kappatree
