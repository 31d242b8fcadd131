#include "kappatree/inseparability.hpp"

#include <algorithm>
#include <queue>

namespace kappatree {

namespace {

// Unit-capacity vertex-split network: vertex v becomes in(v) = 2v and out(v) = 2v + 1.
class SplitNetwork {
public:
    explicit SplitNetwork(const Graph& g) : n_(2 * g.size()), cap_(n_ * n_, 0) {
        for (VertexIndex v = 0; v < g.size(); ++v) {
            cap_[at(2 * v, 2 * v + 1)] = 1;
        }
        for (auto [u, v] : g.edges()) {
            cap_[at(2 * u + 1, 2 * v)] = 1;
            cap_[at(2 * v + 1, 2 * u)] = 1;
        }
    }

    std::size_t max_flow(std::size_t source, std::size_t sink) {
        std::size_t flow = 0;
        std::vector<std::size_t> parent(n_);
        while (true) {
            std::fill(parent.begin(), parent.end(), n_);
            parent[source] = source;
            std::queue<std::size_t> queue;
            queue.push(source);
            while (!queue.empty() && parent[sink] == n_) {
                const std::size_t x = queue.front();
                queue.pop();
                for (std::size_t y = 0; y < n_; ++y) {
                    if (parent[y] == n_ && cap_[at(x, y)] > 0) {
                        parent[y] = x;
                        queue.push(y);
                    }
                }
            }
            if (parent[sink] == n_) {
                return flow;
            }
            for (std::size_t y = sink; y != source; y = parent[y]) {
                --cap_[at(parent[y], y)];
                ++cap_[at(y, parent[y])];
            }
            ++flow;
        }
    }

private:
    std::size_t at(std::size_t x, std::size_t y) const { return x * n_ + y; }

    std::size_t n_;
    std::vector<int> cap_;
};

// Bron-Kerbosch with pivoting over an arbitrary symmetric relation given as neighbour masks.
void bron_kerbosch(const std::vector<VertexSet>& rel, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    VertexIndex pivot = (p | x).front();
    std::size_t best = 0;
    for (VertexIndex u : p | x) {
        const std::size_t cover = (p & rel[u]).size();
        if (cover >= best) {
            best = cover;
            pivot = u;
        }
    }
    for (VertexIndex v : p - rel[pivot]) {
        bron_kerbosch(rel, r | VertexSet::single(v), p & rel[v], x & rel[v], out);
        p.erase(v);
        x.insert(v);
    }
}

}  // namespace

DisjointPaths disjoint_path_count(const Graph& g, VertexIndex u, VertexIndex v) {
    if (u == v) {
        throw GraphError("disjoint_path_count needs two distinct vertices");
    }
    if (g.adjacent(u, v)) {
        return {true, 0};
    }
    SplitNetwork net(g);
    return {false, net.max_flow(2 * std::size_t{u} + 1, 2 * std::size_t{v})};
}

LocalConnectivity::LocalConnectivity(const Graph& g) : n_(g.size()), paths_(n_ * n_, 0) {
    adjacent_.reserve(n_);
    for (VertexIndex v = 0; v < n_; ++v) {
        adjacent_.push_back(g.neighbours(v));
    }
    for (VertexIndex u = 0; u < n_; ++u) {
        for (VertexIndex v = u + 1; v < n_; ++v) {
            const DisjointPaths dp = disjoint_path_count(g, u, v);
            paths_[u * n_ + v] = paths_[v * n_ + u] = dp.count;
        }
    }
}

VertexSet LocalConnectivity::linked_to(VertexIndex v, std::size_t k) const {
    VertexSet out;
    for (VertexIndex u = 0; u < n_; ++u) {
        if (u != v && linked(u, v, k)) {
            out.insert(u);
        }
    }
    return out;
}

bool pair_inseparable(const Graph& g, VertexIndex u, VertexIndex v, std::size_t k) {
    const DisjointPaths dp = disjoint_path_count(g, u, v);
    return dp.adjacent || dp.count >= k + 1;
}

bool is_k_inseparable_set(const LocalConnectivity& lc, VertexSet y, std::size_t k) {
    if (y.size() < k + 1) {
        return false;
    }
    for (VertexIndex u : y) {
        for (VertexIndex v : y) {
            if (u < v && !lc.linked(u, v, k)) {
                return false;
            }
        }
    }
    return true;
}

bool is_k_inseparable_set(const Graph& g, VertexSet y, std::size_t k) {
    if (y.size() < k + 1) {
        return false;
    }
    for (VertexIndex u : y) {
        for (VertexIndex v : y) {
            if (u < v && !pair_inseparable(g, u, v, k)) {
                return false;
            }
        }
    }
    return true;
}

OmegaFamily maximal_k_inseparable_sets(const Graph& g, const LocalConnectivity& lc, std::size_t k) {
    std::vector<VertexSet> rel;
    rel.reserve(g.size());
    for (VertexIndex v = 0; v < g.size(); ++v) {
        rel.push_back(lc.linked_to(v, k));
    }
    std::vector<VertexSet> cliques;
    bron_kerbosch(rel, {}, g.vertices(), {}, cliques);
    std::erase_if(cliques, [k](VertexSet c) { return c.size() < k + 1; });

    // Sets sharing k+1 vertices have a common k-inseparable subset and so a common maximal
    // extension. For maximal cliques of the pairwise relation this never fires; it is kept so
    // the output is maximal regardless of how the candidates were produced.
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < cliques.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < cliques.size() && !merged; ++j) {
                if ((cliques[i] & cliques[j]).size() >= k + 1) {
                    cliques[i] |= cliques[j];
                    cliques.erase(cliques.begin() + static_cast<std::ptrdiff_t>(j));
                    merged = true;
                }
            }
        }
    }
    std::sort(cliques.begin(), cliques.end());
    return {k, std::move(cliques)};
}

OmegaFamily maximal_k_inseparable_sets(const Graph& g, std::size_t k) {
    return maximal_k_inseparable_sets(g, LocalConnectivity(g), k);
}

bool has_separated_pair(const Graph& g, std::size_t k, const OmegaFamily& omega) {
    if (omega.members.size() < 2) {
        return false;
    }
    bool found = false;
    const VertexSet all = g.vertices();
    for_each_subset_of_size(all, k, [&](VertexSet s) {
        for (VertexSet c : components(g, all - s)) {
            if (boundary(g, c) != s) {
                continue;
            }
            const VertexSet near = c | s;
            const VertexSet far = all - c;
            const bool inside = std::any_of(omega.members.begin(), omega.members.end(),
                                            [&](VertexSet w) { return w.subset_of(near); });
            const bool outside = std::any_of(omega.members.begin(), omega.members.end(),
                                             [&](VertexSet w) { return w.subset_of(far); });
            if (inside && outside) {
                found = true;
                return false;
            }
        }
        return true;
    });
    return found;
}

std::optional<KappaResult> compute_kappa(const Graph& g) {
    if (!g.connected()) {
        throw DisconnectedGraphError("graph is not connected");
    }
    if (g.size() < 3) {
        return std::nullopt;
    }
    const LocalConnectivity lc(g);
    for (std::size_t k = 1; k + 2 <= g.size(); ++k) {
        OmegaFamily omega = maximal_k_inseparable_sets(g, lc, k);
        if (has_separated_pair(g, k, omega)) {
            return KappaResult{k, std::move(omega)};
        }
    }
    return std::nullopt;
}

}  // namespace kappatree
