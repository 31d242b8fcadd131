#include "kappatree/graph.hpp"

#include <algorithm>
#include <set>

namespace kappatree {

Graph::Graph(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
        throw GraphError("duplicate vertex label");
    }
    if (labels_.size() > kMaxVertices) {
        throw GraphError("graph has " + std::to_string(labels_.size()) + " vertices; at most " +
                         std::to_string(kMaxVertices) + " are supported");
    }
    adjacency_.assign(labels_.size(), VertexSet{});
    for (const auto& [x, y] : edges) {
        const VertexIndex u = index_of(x);
        const VertexIndex v = index_of(y);
        if (u == v) {
            continue;
        }
        adjacency_[u].insert(v);
        adjacency_[v].insert(u);
    }
}

Graph Graph::from_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
    std::set<std::string> seen;
    for (const auto& [x, y] : edges) {
        seen.insert(x);
        seen.insert(y);
    }
    return Graph(std::vector<std::string>(seen.begin(), seen.end()), edges);
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (VertexSet n : adjacency_) {
        twice += n.size();
    }
    return twice / 2;
}

std::optional<VertexIndex> Graph::find(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) {
        return std::nullopt;
    }
    return static_cast<VertexIndex>(it - labels_.begin());
}

VertexIndex Graph::index_of(std::string_view label) const {
    if (auto v = find(label)) {
        return *v;
    }
    throw GraphError("unknown vertex '" + std::string(label) + "'");
}

std::vector<std::pair<VertexIndex, VertexIndex>> Graph::edges() const {
    std::vector<std::pair<VertexIndex, VertexIndex>> out;
    for (VertexIndex u = 0; u < size(); ++u) {
        for (VertexIndex v : adjacency_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

bool Graph::connected() const {
    return size() == 0 || component_of(*this, vertices(), 0) == vertices();
}

Graph Graph::induced(VertexSet keep) const {
    std::vector<std::string> kept = labels_of(keep);
    std::vector<std::pair<std::string, std::string>> e;
    for (auto [u, v] : edges()) {
        if (keep.contains(u) && keep.contains(v)) {
            e.emplace_back(labels_[u], labels_[v]);
        }
    }
    return Graph(std::move(kept), e);
}

Graph Graph::with_edges(const std::vector<std::pair<std::string, std::string>>& extra) const {
    Graph copy = *this;
    for (const auto& [x, y] : extra) {
        const VertexIndex u = index_of(x);
        const VertexIndex v = index_of(y);
        if (u != v) {
            copy.adjacency_[u].insert(v);
            copy.adjacency_[v].insert(u);
        }
    }
    return copy;
}

VertexSet Graph::set_of(const std::vector<std::string>& labels) const {
    VertexSet s;
    for (const auto& l : labels) {
        s.insert(index_of(l));
    }
    return s;
}

std::vector<std::string> Graph::labels_of(VertexSet s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (VertexIndex v : s) {
        out.push_back(labels_[v]);
    }
    return out;
}

std::string format_set(const Graph& g, VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (VertexIndex v : s) {
        if (!first) {
            out += ',';
        }
        out += g.label(v);
        first = false;
    }
    out += '}';
    return out;
}

VertexSet boundary(const Graph& g, VertexSet s) {
    VertexSet reach;
    for (VertexIndex v : s) {
        reach |= g.neighbours(v);
    }
    return reach - s;
}

VertexSet star_complement(const Graph& g, VertexSet c) { return g.vertices() - c - boundary(g, c); }

StarClosure double_star_closure(const Graph& g, VertexSet c) {
    const VertexSet star = star_complement(g, c);
    VertexSet unattached;
    for (VertexIndex v : boundary(g, c)) {
        if (!g.neighbours(v).intersects(star)) {
            unattached.insert(v);
        }
    }
    return {c | unattached, unattached};
}

VertexSet component_of(const Graph& g, VertexSet s, VertexIndex v) {
    if (!s.contains(v)) {
        return {};
    }
    VertexSet seen = VertexSet::single(v);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (VertexIndex u : frontier) {
            next |= g.neighbours(u);
        }
        next = (next & s) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<VertexSet> components(const Graph& g, VertexSet s) {
    std::vector<VertexSet> out;
    VertexSet rest = s;
    while (!rest.empty()) {
        VertexSet comp = component_of(g, rest, rest.front());
        out.push_back(comp);
        rest -= comp;
    }
    return out;
}

bool is_connected_set(const Graph& g, VertexSet s) { return !s.empty() && component_of(g, s, s.front()) == s; }

CornerDecomposition corner_decomposition(const Graph& g, VertexSet c, VertexSet d) {
    const VertexSet nc = boundary(g, c);
    const VertexSet nd = boundary(g, d);
    const VertexSet cs = g.vertices() - c - nc;
    const VertexSet ds = g.vertices() - d - nd;
    CornerDecomposition out;
    out.c_d = c & d;
    out.c_dstar = c & ds;
    out.cstar_d = cs & d;
    out.cstar_dstar = cs & ds;
    out.c_nd = c & nd;
    out.cstar_nd = cs & nd;
    out.d_nc = d & nc;
    out.dstar_nc = ds & nc;
    out.centre = nc & nd;
    return out;
}

}  // namespace kappatree
