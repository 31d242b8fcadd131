#ifndef KAPPATREE_DECOMPOSITION_HPP
#define KAPPATREE_DECOMPOSITION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kappatree/cut_system.hpp"
#include "kappatree/nesting.hpp"
#include "kappatree/structure_tree.hpp"

namespace kappatree {

/// Torso of a block: the induced subgraph plus ideal edges inside each adjacent separator.
struct BlockGraph {
    VertexSet block;  ///< over the parent graph
    Graph graph;      ///< over the block's labels
    std::vector<std::pair<std::string, std::string>> ideal_edges;  ///< added pairs, sorted
};

BlockGraph block_graph(const StructureTree& t, std::size_t block);

/// A cut C with NC inside block B while C ∪ NC is itself a small block B' holding an omega
/// member. Inseparability inside B's block graph may then be stronger than in the graph.
struct ExceptionalWarning {
    std::size_t cut = 0;
    std::size_t block = 0;       ///< B
    std::size_t cut_block = 0;   ///< B' = C ∪ NC
    std::size_t omega_member = 0;

    friend bool operator==(const ExceptionalWarning&, const ExceptionalWarning&) = default;
};

/// Size test is 2|B'| <= 3 kappa.
std::vector<ExceptionalWarning> detect_exceptional(const StructureTree& t, std::size_t kappa, const OmegaFamily& omega);

/// One run of the pipeline on a graph.
struct Analysis {
    Graph graph;
    std::optional<std::size_t> kappa;  ///< absent when the graph is trivial
    OmegaFamily omega;
    CutSystem system;
    NestingStats stats;
    std::vector<CutClass> classes;     ///< indexed by cut id of `system`
    NestedSystem nested;               ///< omega-optimal subsystem
    StructureTree tree;
    std::vector<ExceptionalWarning> warnings;

    bool trivial() const { return !kappa.has_value(); }
};

/// Throws DisconnectedGraphError for disconnected input and InvariantViolation when the tree fails validation.
Analysis analyze(const Graph& g, EnumerationStrategy strategy = EnumerationStrategy::kTightSeparators);

enum class StopReason { kExpanded, kTrivial, kDepthLimit };

struct DecompositionLevel {
    struct Child {
        std::size_t block = 0;
        BlockGraph block_graph;
        StopReason stop = StopReason::kTrivial;
        std::vector<DecompositionLevel> level;  ///< one entry when expanded
    };

    std::size_t depth = 0;
    Analysis analysis;
    std::vector<Child> children;
};

struct DecompositionReport {
    DecompositionLevel root;
    bool kappa_increasing = true;
    bool block_graphs_connected = true;
    bool depth_limit_hit = false;
    std::vector<std::string> problems;
};

DecompositionReport decompose_recursively(const Graph& g, std::size_t max_depth = 8);

}  // namespace kappatree

#endif  // KAPPATREE_DECOMPOSITION_HPP
