#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "kappatree/cut_system.hpp"
#include "kappatree/oracle.hpp"

using namespace kappatree;
using fixtures::set;

namespace {

std::vector<VertexSet> cut_sets(const CutSystem& sys) {
    std::vector<VertexSet> out;
    for (const Cut& c : sys.cuts()) {
        out.push_back(c.vertices);
    }
    return out;
}

std::vector<VertexSet> oracle_cut_sets(const Graph& g) {
    const auto k = oracle::kappa(g);
    if (!k) {
        return {};
    }
    return oracle::cuts(g, *k, oracle::maximal_inseparable_sets(g, *k));
}

}  // namespace

TEST(Separates, Examples) {
    const Graph x5 = fixtures::x_n(5);
    const Cut c3 = make_cut(x5, set(x5, {"1", "2"}));
    EXPECT_TRUE(separates(c3, set(x5, {"1", "2", "a", "b"}), set(x5, {"3", "4", "a", "b"})));
    EXPECT_FALSE(separates(c3, c3.boundary, c3.boundary));

    const Graph ring = fixtures::ring();
    const Cut c = make_cut(ring, set(ring, {"x2", "y1", "y2"}));
    EXPECT_EQ(c.boundary, set(ring, {"x1", "x3"}));
    EXPECT_TRUE(separates(c, set(ring, {"x1", "x2", "y1"}), set(ring, {"x3", "x4", "y3"})));
}

TEST(EnumerateCuts, X5) {
    const Graph g = fixtures::x_n(5);
    const CutSystem sys = build_cut_system(g);
    const std::vector<VertexSet> expected{set(g, {"1"}),      set(g, {"1", "2"}), set(g, {"1", "2", "3"}),
                                          set(g, {"3", "4", "5"}), set(g, {"4", "5"}), set(g, {"5"})};
    EXPECT_EQ(sys.kappa(), 3u);
    EXPECT_EQ(cut_sets(sys), expected);
    EXPECT_EQ(cut_sets(sys), oracle_cut_sets(g));
    EXPECT_EQ(cut_sets(build_cut_system(g, EnumerationStrategy::kTightSeparators)), expected);
}

TEST(EnumerateCuts, CompleteGraphIsEmpty) {
    for (int m = 2; m <= 6; ++m) {
        EXPECT_TRUE(build_cut_system(fixtures::complete(m)).empty());
    }
}

TEST(EnumerateCuts, RingHasTwelve) {
    const Graph g = fixtures::ring();
    const CutSystem sys = build_cut_system(g);
    EXPECT_EQ(sys.size(), 12u);
    EXPECT_EQ(cut_sets(sys), oracle_cut_sets(g));
    EXPECT_EQ(cut_sets(build_cut_system(g, EnumerationStrategy::kTightSeparators)), cut_sets(sys));
    EXPECT_EQ(sys.separators().size(), 6u);
}

TEST(Axioms, FixturesPass) {
    EXPECT_TRUE(verify_axioms(build_cut_system(fixtures::x_n(5))).passed());
    const AxiomReport ring = verify_axioms(build_cut_system(fixtures::ring()));
    EXPECT_TRUE(ring.passed());
    EXPECT_TRUE(ring.a2_prime);
}

TEST(Axioms, TruncatedRingSystemFails) {
    const Graph g = fixtures::ring();
    const CutSystem full = build_cut_system(g);
    std::vector<VertexSet> kept;
    for (const Cut& c : full.cuts()) {
        if (c.vertices != set(g, {"x2", "y1", "y2"})) {
            kept.push_back(c.vertices);
        }
    }
    const CutSystem truncated(g, full.kappa(), full.omega(), kept);
    const AxiomReport report = verify_axioms(truncated);
    EXPECT_FALSE(report.passed());
    // The missing cut is a component next to a surviving cut, so the component axiom is what breaks.
    EXPECT_FALSE(report.a1);
    ASSERT_FALSE(report.violations.empty());
    EXPECT_EQ(report.violations.front().kind, AxiomViolation::Kind::kA1);
}

TEST(ClassifyCut, Examples) {
    const Graph x5 = fixtures::x_n(5);
    const CutSystem sx = build_cut_system(x5);
    EXPECT_EQ(classify_cut(sx, *sx.find(set(x5, {"1"}))), (CutClass{true, true}));
    EXPECT_EQ(cut_components(sx, sx.cut(*sx.find(set(x5, {"1"}))).star),
              std::vector<std::size_t>{*sx.find(set(x5, {"3", "4", "5"}))});

    const Graph ring = fixtures::ring();
    const CutSystem sr = build_cut_system(ring);
    EXPECT_EQ(classify_cut(sr, *sr.find(set(ring, {"x2", "y1", "y2"}))), (CutClass{false, true}));

    const Graph path = Graph::from_edges({{"1", "2"}, {"2", "3"}});
    const CutSystem single(path, 1, OmegaFamily{1, {set(path, {"1", "2"}), set(path, {"2", "3"})}},
                           {set(path, {"1"}), set(path, {"3"})});
    EXPECT_TRUE(classify_cut(single, 0).is_a);
}

TEST(Slices, Examples) {
    const Graph x5 = fixtures::x_n(5);
    const auto slices = find_slices(build_cut_system(x5));
    ASSERT_EQ(slices.size(), 1u);
    EXPECT_EQ(slices.front().vertices, set(x5, {"c", "d"}));
    EXPECT_TRUE(find_slices(build_cut_system(fixtures::ring())).empty());
    EXPECT_TRUE(find_slices(build_cut_system(fixtures::complete(5))).empty());
}

TEST(HatGraph, X5DropsTheSlice) {
    const Graph g = fixtures::x_n(5);
    const CutSystem sys = build_cut_system(g);
    const HatGraph hat = hat_graph(sys);
    EXPECT_EQ(hat.graph, g.induced(g.vertices() - set(g, {"c", "d"})));
    const Cut& lifted = hat.lifted.cut(hat.lift[*sys.find(set(g, {"1", "2"}))]);
    EXPECT_EQ(hat.to_original(lifted.vertices), set(g, {"1", "2"}));
    EXPECT_EQ(hat.to_original(lifted.boundary), set(g, {"3", "a", "b"}));
    EXPECT_TRUE(find_slices(hat.lifted).empty());
}

TEST(HatGraph, SliceFreeIsFixpoint) {
    const Graph g = fixtures::ring();
    const CutSystem sys = build_cut_system(g);
    const HatGraph hat = hat_graph(sys);
    EXPECT_EQ(hat.graph, g);
    EXPECT_EQ(cut_sets(hat.lifted), cut_sets(sys));
}

TEST(TightSeparators, Examples) {
    const Graph x5 = fixtures::x_n(5);
    EXPECT_EQ(enumerate_tight_separators(x5, x5.index_of("1"), x5.index_of("5"), 3),
              (std::vector<VertexSet>{set(x5, {"2", "a", "b"}), set(x5, {"3", "a", "b"}), set(x5, {"4", "a", "b"})}));
    const Graph path = Graph::from_edges({{"1", "2"}, {"2", "3"}});
    EXPECT_EQ(enumerate_tight_separators(path, 0, 2, 1), std::vector<VertexSet>{set(path, {"2"})});
    const Graph ring = fixtures::ring();
    EXPECT_EQ(enumerate_tight_separators(ring, ring.index_of("x1"), ring.index_of("x3"), 2),
              std::vector<VertexSet>{set(ring, {"x2", "x4"})});
}

TEST(TightSeparators, MatchExhaustiveSearch) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = fixtures::random_connected(6 + trial % 4, 0.4, rng);
        for (VertexIndex x = 0; x < g.size(); ++x) {
            for (VertexIndex y = x + 1; y < g.size(); ++y) {
                for (std::size_t k = 1; k <= 3; ++k) {
                    std::vector<VertexSet> expected;
                    const VertexSet pair = VertexSet::single(x) | VertexSet::single(y);
                    for_each_subset_of_size(g.vertices() - pair, k, [&](VertexSet s) {
                        const VertexSet cx = component_of(g, g.vertices() - s, x);
                        const VertexSet cy = component_of(g, g.vertices() - s, y);
                        if (!cx.contains(y) && boundary(g, cx) == s && boundary(g, cy) == s) {
                            expected.push_back(s);
                        }
                    });
                    std::sort(expected.begin(), expected.end());
                    EXPECT_EQ(enumerate_tight_separators(g, x, y, k), expected);
                }
            }
        }
    }
}
