#ifndef KAPPATREE_INSEPARABILITY_HPP
#define KAPPATREE_INSEPARABILITY_HPP

#include <optional>
#include <vector>

#include "kappatree/graph.hpp"

namespace kappatree {

/// Result of a Menger count: adjacent pairs cannot be parted by any vertex set.
struct DisjointPaths {
    bool adjacent = false;
    std::size_t count = 0;  ///< internally vertex-disjoint u-v paths; 0 when adjacent

    friend bool operator==(const DisjointPaths&, const DisjointPaths&) = default;
};

/// Maximum number of internally vertex-disjoint u-v paths (unit vertex capacities).
/// Throws GraphError when u == v.
DisjointPaths disjoint_path_count(const Graph& g, VertexIndex u, VertexIndex v);

/**
 * @brief All-pairs local vertex connectivity, computed once per graph.
 *
 * linked(u, v, k) is true when no vertex set of size <= k avoiding u and v separates them.
 */
class LocalConnectivity {
public:
    explicit LocalConnectivity(const Graph& g);

    bool linked(VertexIndex u, VertexIndex v, std::size_t k) const {
        return u == v || adjacent_[u].contains(v) || paths_[u * n_ + v] >= k + 1;
    }
    /// Vertices linked to `v` at level k (excluding v itself).
    VertexSet linked_to(VertexIndex v, std::size_t k) const;

private:
    std::size_t n_ = 0;
    std::vector<VertexSet> adjacent_;
    std::vector<std::size_t> paths_;
};

bool pair_inseparable(const Graph& g, VertexIndex u, VertexIndex v, std::size_t k);

bool is_k_inseparable_set(const Graph& g, VertexSet y, std::size_t k);
bool is_k_inseparable_set(const LocalConnectivity& lc, VertexSet y, std::size_t k);

/// The maximal k-inseparable sets, in canonical order.
struct OmegaFamily {
    std::size_t k = 0;
    std::vector<VertexSet> members;

    friend bool operator==(const OmegaFamily&, const OmegaFamily&) = default;
};

OmegaFamily maximal_k_inseparable_sets(const Graph& g, std::size_t k);
OmegaFamily maximal_k_inseparable_sets(const Graph& g, const LocalConnectivity& lc, std::size_t k);

struct KappaResult {
    std::size_t kappa = 0;
    OmegaFamily omega;
};

/// Least k at which a connected set with k boundary vertices separates two k-inseparable sets.
/// Returns nullopt when no such k exists (the structure tree is a single vertex).
/// Throws DisconnectedGraphError on disconnected input.
std::optional<KappaResult> compute_kappa(const Graph& g);

/// True when some connected C with N(C) = S, |S| = k, separates two members of `omega`.
bool has_separated_pair(const Graph& g, std::size_t k, const OmegaFamily& omega);

}  // namespace kappatree

#endif  // KAPPATREE_INSEPARABILITY_HPP
