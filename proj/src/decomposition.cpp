#include "kappatree/decomposition.hpp"

#include <algorithm>

namespace kappatree {

BlockGraph block_graph(const StructureTree& t, std::size_t block) {
    BlockGraph out;
    out.block = t.blocks[block].vertices;
    const Graph& g = t.graph;
    for (std::size_t s : t.separators_at(block)) {
        const VertexSet sep = t.separators[s];
        for (VertexIndex u : sep) {
            for (VertexIndex v : sep) {
                if (u < v && !g.adjacent(u, v)) {
                    out.ideal_edges.emplace_back(g.label(u), g.label(v));
                }
            }
        }
    }
    std::sort(out.ideal_edges.begin(), out.ideal_edges.end());
    out.ideal_edges.erase(std::unique(out.ideal_edges.begin(), out.ideal_edges.end()), out.ideal_edges.end());
    out.graph = g.induced(out.block).with_edges(out.ideal_edges);
    return out;
}

std::vector<ExceptionalWarning> detect_exceptional(const StructureTree& t, std::size_t kappa, const OmegaFamily& omega) {
    std::vector<ExceptionalWarning> out;
    if (t.trivial()) {
        return out;
    }
    for (const Cut& c : t.system.cuts()) {
        const VertexSet closed = c.vertices | c.boundary;
        if (2 * closed.size() > 3 * kappa) {
            continue;
        }
        const auto prime = std::find_if(t.blocks.begin(), t.blocks.end(),
                                        [&](const BlockNode& b) { return b.vertices == closed; });
        if (prime == t.blocks.end()) {
            continue;
        }
        const auto member = std::find_if(omega.members.begin(), omega.members.end(),
                                         [&](VertexSet y) { return y.subset_of(closed); });
        if (member == omega.members.end()) {
            continue;
        }
        const std::size_t b_prime = static_cast<std::size_t>(prime - t.blocks.begin());
        for (std::size_t b = 0; b < t.blocks.size(); ++b) {
            if (b != b_prime && c.boundary.subset_of(t.blocks[b].vertices)) {
                out.push_back({c.id, b, b_prime, static_cast<std::size_t>(member - omega.members.begin())});
            }
        }
    }
    return out;
}

Analysis analyze(const Graph& g, EnumerationStrategy strategy) {
    if (!g.connected()) {
        throw DisconnectedGraphError("graph is not connected");
    }
    Analysis a;
    a.graph = g;
    const std::optional<KappaResult> kr = compute_kappa(g);
    if (!kr) {
        a.system = CutSystem(g, 0, OmegaFamily{}, {});
        a.nested.system = a.system;
        a.tree = trivial_tree(g);
        return a;
    }
    a.kappa = kr->kappa;
    a.omega = kr->omega;
    a.system = enumerate_cuts(g, kr->kappa, kr->omega, strategy);
    a.stats = mu_stats(a.system);
    for (std::size_t id = 0; id < a.system.size(); ++id) {
        a.classes.push_back(classify_cut(a.system, id));
    }
    a.nested = omega_optimal_subsystem(a.system, a.stats);
    a.tree = build_tree(a.nested);
    a.warnings = detect_exceptional(a.tree, kr->kappa, a.omega);
    return a;
}

namespace {

void expand(DecompositionLevel& level, std::size_t max_depth, DecompositionReport& report) {
    const Analysis& a = level.analysis;
    if (a.trivial()) {
        return;
    }
    for (std::size_t b = 0; b < a.tree.blocks.size(); ++b) {
        DecompositionLevel::Child child;
        child.block = b;
        child.block_graph = block_graph(a.tree, b);
        const Graph& xb = child.block_graph.graph;
        if (!xb.connected()) {
            report.block_graphs_connected = false;
            report.problems.push_back("block graph of " + format_set(a.graph, child.block_graph.block) +
                                      " is disconnected");
            child.stop = StopReason::kTrivial;
            level.children.push_back(std::move(child));
            continue;
        }
        DecompositionLevel sub;
        sub.depth = level.depth + 1;
        sub.analysis = analyze(xb);
        if (sub.analysis.trivial()) {
            child.stop = StopReason::kTrivial;
        } else {
            if (*sub.analysis.kappa <= *a.kappa) {
                report.kappa_increasing = false;
                report.problems.push_back("kappa does not increase below block " +
                                          format_set(a.graph, child.block_graph.block));
            }
            if (sub.depth >= max_depth) {
                child.stop = StopReason::kDepthLimit;
                report.depth_limit_hit = true;
            } else {
                child.stop = StopReason::kExpanded;
                expand(sub, max_depth, report);
                child.level.push_back(std::move(sub));
            }
        }
        level.children.push_back(std::move(child));
    }
}

}  // namespace

DecompositionReport decompose_recursively(const Graph& g, std::size_t max_depth) {
    DecompositionReport report;
    report.root.analysis = analyze(g);
    if (max_depth > 0) {
        expand(report.root, max_depth, report);
    }
    return report;
}

}  // namespace kappatree
