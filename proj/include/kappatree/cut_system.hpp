#ifndef KAPPATREE_CUT_SYSTEM_HPP
#define KAPPATREE_CUT_SYSTEM_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kappatree/graph.hpp"
#include "kappatree/inseparability.hpp"

namespace kappatree {

/// A connected vertex set together with its boundary (the separator) and star-complement.
struct Cut {
    VertexSet vertices;
    VertexSet boundary;
    VertexSet star;
    std::size_t id = 0;  ///< position in the owning system's canonical order
};

/// One side of a cut: the cut itself or its star-complement. Star-complementation swaps sides.
struct PreCut {
    enum class Side { kCut, kStar };

    std::size_t cut = 0;
    Side side = Side::kCut;

    PreCut complement() const { return {cut, side == Side::kCut ? Side::kStar : Side::kCut}; }
    friend bool operator==(const PreCut&, const PreCut&) = default;
};

/**
 * @brief A finite family of cuts at a fixed separator size, over one graph.
 *
 * Cuts are deduplicated by vertex set and kept in canonical order; ids are positions in
 * that order. The omega family records the inseparable sets the system was built to separate.
 */
class CutSystem {
public:
    CutSystem() = default;
    CutSystem(Graph graph, std::size_t kappa, OmegaFamily omega, std::vector<VertexSet> cut_sets);

    const Graph& graph() const { return graph_; }
    std::size_t kappa() const { return kappa_; }
    const OmegaFamily& omega() const { return omega_; }
    const std::vector<Cut>& cuts() const { return cuts_; }
    const Cut& cut(std::size_t id) const { return cuts_[id]; }
    std::size_t size() const { return cuts_.size(); }
    bool empty() const { return cuts_.empty(); }
    /// Distinct boundaries, canonical order.
    const std::vector<VertexSet>& separators() const { return separators_; }

    std::optional<std::size_t> find(VertexSet vertices) const;
    bool contains(VertexSet vertices) const { return find(vertices).has_value(); }
    /// True when some cut of the system is a subset of `region`.
    bool has_cut_within(VertexSet region) const;
    /// Vertex set of a pre-cut.
    VertexSet vertices_of(PreCut p) const;

    CutSystem subsystem(std::span<const std::size_t> ids) const;

private:
    Graph graph_;
    std::size_t kappa_ = 0;
    OmegaFamily omega_;
    std::vector<Cut> cuts_;
    std::vector<VertexSet> separators_;
};

/// Cut built directly from a vertex set (boundary and star computed in `g`).
Cut make_cut(const Graph& g, VertexSet vertices);

/// Whether C separates A from B: one lies in C ∪ NC, the other in C* ∪ NC, neither inside NC.
bool separates(const Cut& c, VertexSet a, VertexSet b);

enum class EnumerationStrategy {
    kAllSubsets,        ///< every kappa-subset of V is tried as a separator
    kTightSeparators,   ///< only tight separators between vertices of distinct omega members
};

/// Connected components C of V \ S, over |S| = kappa with N(C) = S, separating two omega members.
CutSystem enumerate_cuts(const Graph& g, std::size_t kappa, const OmegaFamily& omega,
                         EnumerationStrategy strategy = EnumerationStrategy::kAllSubsets);

/// Runs compute_kappa and enumerate_cuts; empty system with kappa 0 when the graph is trivial.
CutSystem build_cut_system(const Graph& g, EnumerationStrategy strategy = EnumerationStrategy::kAllSubsets);

struct AxiomViolation {
    enum class Kind { kA1, kA2, kA2PrimeMismatch };

    Kind kind;
    std::size_t first = 0;
    std::size_t second = 0;
    VertexSet witness;  ///< for A1: the offending corner component; otherwise empty
    std::string detail;
};

struct AxiomReport {
    std::size_t pairs_checked = 0;
    bool a1 = true;
    bool a2 = true;
    bool a2_prime = true;
    bool a2_equivalent = true;  ///< A2 and A2' agree on every pair
    std::vector<AxiomViolation> violations;  ///< first violation of each kind

    bool passed() const { return a1 && a2 && a2_equivalent; }
};

/// Checks axioms A1, A2 and A2' over all ordered pairs of cuts, including C with itself.
AxiomReport verify_axioms(const CutSystem& sys);

struct CutClass {
    bool is_a = false;  ///< nested with every cut of the system
    bool is_b = false;  ///< C* has exactly one component that is a cut

    friend bool operator==(const CutClass&, const CutClass&) = default;
};

CutClass classify_cut(const CutSystem& sys, std::size_t id);

/// Components of C* (resp. of a region) that are cuts of the system.
std::vector<std::size_t> cut_components(const CutSystem& sys, VertexSet region);

struct Slice {
    VertexSet vertices;
    VertexSet separator;
};

/// Components of V \ S, over separators S of the system, that are not cuts. Deduplicated.
std::vector<Slice> find_slices(const CutSystem& sys);

/**
 * @brief The slice-free quotient of a thin cut system.
 *
 * Slice vertices are deleted and the boundary of every slice is made a clique. Cuts are
 * lifted by intersecting with the kept vertices; boundaries are unchanged by this.
 */
struct HatGraph {
    Graph graph;
    std::vector<VertexIndex> kept;          ///< hat index -> original index
    CutSystem lifted;                       ///< system over `graph`
    std::vector<std::size_t> lift;          ///< original cut id -> lifted cut id

    VertexSet to_original(VertexSet hat_set) const;
    VertexSet to_hat(VertexSet original) const;
};

HatGraph hat_graph(const CutSystem& sys);

/// Every S with |S| = k such that x and y lie in distinct components of V \ S that are both
/// adjacent to all of S. Canonical order.
std::vector<VertexSet> enumerate_tight_separators(const Graph& g, VertexIndex x, VertexIndex y, std::size_t k);

}  // namespace kappatree

#endif  // KAPPATREE_CUT_SYSTEM_HPP
