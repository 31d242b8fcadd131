#ifndef KAPPATREE_TESTS_FIXTURES_HPP
#define KAPPATREE_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kappatree/graph.hpp"

namespace fixtures {

using kappatree::Graph;
using kappatree::VertexSet;
using Edges = std::vector<std::pair<std::string, std::string>>;

inline std::string num(int i) { return std::to_string(i); }

/// Path 1..n, 4-cycle a-b-c-d, every path vertex joined to a and b.
inline Graph x_n(int n) {
    Edges e{{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}};
    for (int i = 1; i <= n; ++i) {
        if (i < n) {
            e.emplace_back(num(i), num(i + 1));
        }
        e.emplace_back(num(i), "a");
        e.emplace_back(num(i), "b");
    }
    return Graph::from_edges(e);
}

/// m-cycle x1..xm with a triangle x_i, x_{i+1}, y_i on every edge.
inline Graph triangle_ring(int m) {
    Edges e;
    for (int i = 1; i <= m; ++i) {
        const std::string x = "x" + num(i);
        const std::string next = "x" + num(i % m + 1);
        const std::string y = "y" + num(i);
        e.emplace_back(x, next);
        e.emplace_back(y, x);
        e.emplace_back(y, next);
    }
    return Graph::from_edges(e);
}

inline Graph ring() { return triangle_ring(4); }

inline Graph complete(int m) {
    Edges e;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            e.emplace_back(num(i), num(j));
        }
    }
    return Graph::from_edges(e);
}

inline Graph circulant(int n, std::initializer_list<int> steps) {
    Edges e;
    for (int i = 0; i < n; ++i) {
        for (int s : steps) {
            e.emplace_back(num(i), num((i + s) % n));
        }
    }
    return Graph::from_edges(e);
}

inline Graph cycle(int m) { return circulant(m, {1}); }

inline Graph petersen() {
    Edges e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back("o" + num(i), "o" + num((i + 1) % 5));
        e.emplace_back("i" + num(i), "i" + num((i + 2) % 5));
        e.emplace_back("o" + num(i), "i" + num(i));
    }
    return Graph::from_edges(e);
}

inline Graph k33() {
    Edges e;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            e.emplace_back("l" + num(i), "r" + num(j));
        }
    }
    return Graph::from_edges(e);
}

inline Graph cube() {
    Edges e;
    for (int v = 0; v < 8; ++v) {
        for (int bit = 1; bit < 8; bit <<= 1) {
            if ((v & bit) == 0) {
                e.emplace_back(num(v), num(v | bit));
            }
        }
    }
    return Graph::from_edges(e);
}

/// G(n, p) conditioned on connectivity; vertices v00..v{n-1}.
inline Graph random_connected(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        labels.push_back((i < 10 ? "v0" : "v") + num(i));
    }
    while (true) {
        Edges e;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (coin(rng)) {
                    e.emplace_back(labels[i], labels[j]);
                }
            }
        }
        Graph g(labels, e);
        if (g.connected()) {
            return g;
        }
    }
}

/// Two 4-cliques a0..a3 and b0..b3 with pendant blocks and a small gadget g0..g2 between them.
/// Some omega pairs are parted only by cuts that cross others, so N is larger than the mu_min cuts.
inline Graph mu_gap() {
    return Graph::from_edges({
        {"a0", "a1"}, {"a0", "a2"}, {"a0", "a3"}, {"a0", "g1"}, {"a0", "g2"}, {"a0", "l0"}, {"a0",
        "l1"}, {"a1", "a2"}, {"a1", "a3"}, {"a1", "b1"}, {"a1", "l0"}, {"a1", "l1"}, {"a2", "a3"},
        {"a2", "l0"}, {"a2", "l1"}, {"a3", "g1"}, {"a3", "g2"}, {"b0", "b1"}, {"b0", "b2"}, {"b0",
        "b3"}, {"b0", "g0"}, {"b0", "g2"}, {"b0", "r0"}, {"b0", "r1"}, {"b1", "b2"}, {"b1", "b3"},
        {"b1", "r0"}, {"b1", "r1"}, {"b2", "b3"}, {"b2", "r0"}, {"b2", "r1"}, {"b3", "g0"}, {"b3",
        "g1"}, {"b3", "g2"}, {"g0", "g1"}, {"g0", "g2"}, {"g1", "g2"}, {"l0", "l1"}, {"r0", "r1"}
    });
}

inline VertexSet set(const Graph& g, std::initializer_list<const char*> labels) {
    return g.set_of(std::vector<std::string>(labels.begin(), labels.end()));
}

}  // namespace fixtures

#endif  // KAPPATREE_TESTS_FIXTURES_HPP
