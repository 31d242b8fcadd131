#include <gtest/gtest.h>

#include "checks.hpp"
#include "fixtures.hpp"

namespace {

using namespace kappatree;

std::vector<Graph> corpus() {
    std::vector<Graph> out = {fixtures::x_n(3), fixtures::x_n(5), fixtures::x_n(6), fixtures::ring(),
                              fixtures::complete(5), fixtures::cycle(6), fixtures::petersen(), fixtures::k33(),
                              fixtures::cube(), fixtures::circulant(8, {1, 2}), fixtures::mu_gap()};
    for (int m = 5; m <= 7; ++m) {
        out.push_back(fixtures::triangle_ring(m));
    }
    std::mt19937 rng(20261019);
    for (int i = 0; i < 12; ++i) {
        out.push_back(fixtures::random_connected(6 + i % 5, i % 2 ? 0.35 : 0.5, rng));
        out.push_back(checks::random_glued(7 + i % 4, rng));
    }
    return out;
}

void report(const checks::Log& log, const Graph& g) {
    EXPECT_TRUE(log.clean()) << log.violations.size() << " violations, first: "
                             << (log.clean() ? "" : log.violations.front()) << "\n" << checks::name(g);
}

TEST(Properties, OracleEquivalence) {
    std::mt19937 rng(7);
    for (const Graph& g : corpus()) {
        checks::Log log;
        checks::oracle_equivalence(g, rng, log);
        report(log, g);
    }
}

TEST(Properties, AxiomsCornersAndHat) {
    for (const Graph& g : corpus()) {
        const Analysis a = analyze(g);
        checks::Log log;
        checks::axioms(a.system, log);
        checks::corners(a.system, log);
        checks::hat(a.system, log);
        checks::hat(a.nested.system, log);
        report(log, g);
    }
}

TEST(Properties, NestedSystemsAndBlocks) {
    for (const Graph& g : corpus()) {
        const Analysis a = analyze(g);
        checks::Log log;
        checks::nested_theorems(a, log);
        checks::tree(a, log);
        checks::block_graph_inseparability(a, log);
        report(log, g);
    }
}

TEST(Properties, InvarianceAndRecursion) {
    for (const Graph& g : corpus()) {
        const Analysis a = analyze(g);
        checks::Log log;
        checks::invariance(a, log);
        checks::recursion(g, log);
        report(log, g);
    }
}

TEST(Properties, AutomorphismCounts) {
    EXPECT_EQ(checks::automorphisms(fixtures::petersen()).size(), 120U);
    EXPECT_EQ(checks::automorphisms(fixtures::cube()).size(), 48U);
    EXPECT_EQ(checks::automorphisms(fixtures::cycle(6)).size(), 12U);
}

TEST(Properties, RingCrossingPairsHaveFullCorners) {
    const CutSystem sys = build_cut_system(fixtures::ring());
    checks::Log log;
    checks::PairingTally tally;
    checks::corners(sys, log, &tally);
    EXPECT_TRUE(log.clean());
    EXPECT_EQ(tally.crossing_pairs, 4U);
}

TEST(Properties, CornerInheritanceFailsOppositeAnEmptyCorner) {
    const CutSystem sys = build_cut_system(fixtures::ring());
    const Graph& g = sys.graph();
    const std::size_t c = *sys.find(fixtures::set(g, {"x1", "x2", "y1", "y2", "y4"}));
    const std::size_t d = *sys.find(fixtures::set(g, {"x1", "x4", "y1", "y3", "y4"}));
    const std::size_t e = *sys.find(fixtures::set(g, {"x2", "y1", "y2"}));
    const CornerDecomposition cd = corner_decomposition(g, sys.cut(c).vertices, sys.cut(d).vertices);
    ASSERT_TRUE(cd.cstar_dstar.empty());
    const auto parts = cut_components(sys, cd.c_d);
    ASSERT_EQ(parts.size(), 1U);
    EXPECT_TRUE(are_nested(sys, e, c));
    EXPECT_TRUE(are_nested(sys, e, d));
    EXPECT_FALSE(are_nested(sys, e, parts.front()));
    EXPECT_FALSE(oracle::nested(sys, e, parts.front()));
}

}  // namespace
