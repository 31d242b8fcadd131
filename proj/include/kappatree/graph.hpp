#ifndef KAPPATREE_GRAPH_HPP
#define KAPPATREE_GRAPH_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace kappatree {

/// Index of a vertex inside its owning Graph. Indices follow label order.
using VertexIndex = std::uint32_t;

inline constexpr std::size_t kMaxVertices = 64;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DisconnectedGraphError : public GraphError {
public:
    using GraphError::GraphError;
};

/**
 * @brief A set of vertices of one fixed Graph, stored as a 64-bit membership mask.
 *
 * Set algebra is word-parallel. Ordering (operator<=>) is the canonical order used for
 * all output: lexicographic comparison of the sorted member lists, which coincides with
 * comparing sorted label lists because vertex indices follow label order.
 */
class VertexSet {
public:
    class iterator {
    public:
        using value_type = VertexIndex;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        VertexIndex operator*() const { return static_cast<VertexIndex>(std::countr_zero(rest_)); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(VertexIndex v) { return VertexSet(std::uint64_t{1} << v); }
    /// The set {0, ..., n-1}.
    static constexpr VertexSet first_n(std::size_t n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(VertexIndex v) const { return (bits_ >> v) & 1U; }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool proper_subset_of(VertexSet other) const { return subset_of(other) && bits_ != other.bits_; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
    /// Smallest member; undefined on the empty set.
    constexpr VertexIndex front() const { return static_cast<VertexIndex>(std::countr_zero(bits_)); }

    constexpr void insert(VertexIndex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(VertexIndex v) { bits_ &= ~(std::uint64_t{1} << v); }

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator&=(VertexSet o) {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator-=(VertexSet o) {
        bits_ &= ~o.bits_;
        return *this;
    }

    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
        if (a.bits_ == b.bits_) {
            return std::strong_ordering::equal;
        }
        // The first position where the sorted member lists differ is the lowest differing bit.
        const std::uint64_t diff = a.bits_ ^ b.bits_;
        const std::uint64_t low = diff & (~diff + 1);
        const std::uint64_t above = ~(low | (low - 1));
        const bool a_has = (a.bits_ & low) != 0;
        const VertexSet& without = a_has ? b : a;
        // The set lacking the differing element is smaller only when it has nothing beyond it
        // (it is then a prefix of the other list).
        const bool without_continues = (without.bits_ & above) != 0;
        if (a_has) {
            return without_continues ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return without_continues ? std::strong_ordering::greater : std::strong_ordering::less;
    }

private:
    std::uint64_t bits_ = 0;
};

/**
 * @brief Immutable finite simple graph over text-labelled vertices.
 *
 * Vertices are indexed in lexicographic label order. Loops are dropped and parallel edges
 * collapse on construction. Connectivity is not required here; analysis entry points reject
 * disconnected graphs.
 */
class Graph {
public:
    Graph() = default;

    /// Builds the graph on the given labels (any order, must be unique) and edges over label pairs.
    Graph(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& edges);

    /// Builds the graph whose vertex set is exactly the set of edge endpoints.
    static Graph from_edges(const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t size() const { return labels_.size(); }
    std::size_t edge_count() const;
    const std::string& label(VertexIndex v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<VertexIndex> find(std::string_view label) const;
    /// Like find(), but throws GraphError for unknown labels.
    VertexIndex index_of(std::string_view label) const;

    VertexSet vertices() const { return VertexSet::first_n(labels_.size()); }
    VertexSet neighbours(VertexIndex v) const { return adjacency_[v]; }
    bool adjacent(VertexIndex u, VertexIndex v) const { return adjacency_[u].contains(v); }

    /// Edges as index pairs (u < v), sorted.
    std::vector<std::pair<VertexIndex, VertexIndex>> edges() const;

    bool connected() const;

    /// Subgraph induced on `keep`; labels are preserved.
    Graph induced(VertexSet keep) const;
    /// Copy of this graph with the given label-pair edges added.
    Graph with_edges(const std::vector<std::pair<std::string, std::string>>& extra) const;

    /// Throws GraphError on unknown labels.
    VertexSet set_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(VertexSet s) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<VertexSet> adjacency_;
};

/// Renders a set as `{1,2,a}` in label order.
std::string format_set(const Graph& g, VertexSet s);

/// Vertices outside `s` adjacent to at least one vertex of `s`.
VertexSet boundary(const Graph& g, VertexSet s);

/// V(G) minus `c` minus its boundary.
VertexSet star_complement(const Graph& g, VertexSet c);

struct StarClosure {
    VertexSet closure;     ///< (C*)*, which equals C together with the unattached boundary vertices.
    VertexSet unattached;  ///< boundary vertices with no neighbour in C*.
};

StarClosure double_star_closure(const Graph& g, VertexSet c);

/// Maximal connected subsets of `s`, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, VertexSet s);

/// The component of `s` containing `v` (empty if v is not in s).
VertexSet component_of(const Graph& g, VertexSet s, VertexIndex v);

bool is_connected_set(const Graph& g, VertexSet s);

/**
 * @brief The nine-part decomposition of V induced by two vertex sets C and D.
 *
 * Corners are the pairwise intersections of {C, C*} with {D, D*}; links the intersections
 * of one set with the other's boundary; the centre is NC ∩ ND.
 */
struct CornerDecomposition {
    VertexSet c_d;            ///< C ∩ D
    VertexSet c_dstar;        ///< C ∩ D*
    VertexSet cstar_d;        ///< C* ∩ D
    VertexSet cstar_dstar;    ///< C* ∩ D*
    VertexSet c_nd;           ///< C ∩ ND, count a
    VertexSet cstar_nd;       ///< C* ∩ ND, count c
    VertexSet d_nc;           ///< D ∩ NC, count d
    VertexSet dstar_nc;       ///< D* ∩ NC, count b
    VertexSet centre;         ///< NC ∩ ND, count m

    std::size_t a() const { return c_nd.size(); }
    std::size_t b() const { return dstar_nc.size(); }
    std::size_t c() const { return cstar_nd.size(); }
    std::size_t d() const { return d_nc.size(); }
    std::size_t m() const { return centre.size(); }

    std::size_t empty_link_count() const {
        return static_cast<std::size_t>(c_nd.empty()) + cstar_nd.empty() + d_nc.empty() + dstar_nc.empty();
    }
};

CornerDecomposition corner_decomposition(const Graph& g, VertexSet c, VertexSet d);

/// Calls `fn(VertexSet)` for every k-subset of `universe`, in lexicographic order of members.
/// When `fn` returns bool, returning false stops the enumeration.
template <typename Fn>
void for_each_subset_of_size(VertexSet universe, std::size_t k, Fn&& fn) {
    std::vector<VertexIndex> members(universe.begin(), universe.end());
    const std::size_t n = members.size();
    if (k > n) {
        return;
    }
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) {
        pick[i] = i;
    }
    while (true) {
        VertexSet s;
        for (std::size_t i : pick) {
            s.insert(members[i]);
        }
        if constexpr (std::is_same_v<std::invoke_result_t<Fn&, VertexSet>, bool>) {
            if (!fn(s)) {
                return;
            }
        } else {
            fn(s);
        }
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

}  // namespace kappatree

#endif  // KAPPATREE_GRAPH_HPP
