#ifndef KAPPATREE_STRUCTURE_TREE_HPP
#define KAPPATREE_STRUCTURE_TREE_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kappatree/cut_system.hpp"
#include "kappatree/nesting.hpp"

namespace kappatree {

/// Raised when a result that the theory guarantees fails to hold (an implementation fault).
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A ~-class of a slice-free nested system and its block, both over that system's graph.
struct EquivClass {
    std::vector<std::size_t> members;
    VertexSet block;
};

/// C ~ D when C = D, or C* is a proper subset of D with no cut strictly between them.
/// Requires a nested, slice-free system; throws InvariantViolation if ~ is not an equivalence.
std::vector<EquivClass> equivalence_classes(const CutSystem& hat_sys);

/// Intersection of C ∪ NC over the members of the class.
VertexSet block_of_class(const CutSystem& hat_sys, const EquivClass& b);

struct BlockNode {
    std::vector<std::size_t> cuts;  ///< ids in the tree's system (the ~-class)
    VertexSet vertices;             ///< original-graph vertices
};

/// Edge of the tree: a cut, oriented from its separator to its class.
struct TreeEdge {
    std::size_t cut = 0;
    std::size_t separator = 0;
    std::size_t block = 0;
};

/**
 * @brief Bipartite structure tree of a nested thin cut system.
 *
 * Separator nodes are ordered canonically by vertex set, block nodes by their smallest
 * cut id. A trivial tree has one block (all vertices), no separators and no edges.
 */
struct StructureTree {
    Graph graph;
    std::size_t kappa = 0;
    CutSystem system;
    std::vector<Slice> slices;
    HatGraph hat;
    std::vector<VertexSet> separators;
    std::vector<BlockNode> blocks;
    std::vector<TreeEdge> edges;
    std::vector<std::size_t> block_of_cut;

    bool trivial() const { return edges.empty(); }
    std::size_t node_count() const { return separators.size() + blocks.size(); }
    /// Blocks adjacent to separator s.
    std::vector<std::size_t> blocks_at(std::size_t separator) const;
    /// Separators adjacent to block b.
    std::vector<std::size_t> separators_at(std::size_t block) const;
};

StructureTree trivial_tree(const Graph& g);

/// Builds and validates T(N); throws InvariantViolation when validation fails.
StructureTree build_tree(const CutSystem& nested);
StructureTree build_tree(const NestedSystem& nested);

struct TreeReport {
    std::vector<std::string> problems;
    std::vector<std::size_t> leaves;  ///< block indices of degree one

    bool passed() const { return problems.empty(); }
};

TreeReport validate_tree(const StructureTree& t, std::size_t kappa);

/// Vertex permutation as an index map over the graph.
using Permutation = std::vector<VertexIndex>;

Permutation permutation_from_labels(const Graph& g, const std::map<std::string, std::string>& moves);

bool is_automorphism(const Graph& g, const Permutation& pi);

/// True when pi maps the cut set of the system onto itself. Throws GraphError when pi is
/// not an automorphism of the system's graph.
bool check_invariance(const CutSystem& nested, const Permutation& pi);
bool check_invariance(const StructureTree& t, const Permutation& pi);

}  // namespace kappatree

#endif  // KAPPATREE_STRUCTURE_TREE_HPP
