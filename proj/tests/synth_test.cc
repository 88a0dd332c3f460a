#include "infoparity/synth.h"

#include <cmath>
#include <set>

#include "gtest/gtest.h"
#include "infoparity/error.h"
#include "infoparity/geodesics.h"

namespace infoparity {
namespace {

TEST(FamiliesTest, Sizes) {
  EXPECT_EQ(CompleteGraph(4).edge_count(), 6u);
  EXPECT_EQ(CompleteGraph(1).edge_count(), 0u);
  const Graph c6 = CycleGraph(6);
  EXPECT_EQ(c6.edge_count(), 6u);
  EXPECT_EQ(AllPairsDistances(c6).diameter(), 3u);
  const Graph s5 = StarGraph(5);
  EXPECT_EQ(s5.edge_count(), 4u);
  EXPECT_EQ(s5.degree(0), 4u);
  EXPECT_EQ(PathGraph(5).edge_count(), 4u);
  EXPECT_EQ(AllPairsDistances(PathGraph(5)).diameter(), 4u);
}

TEST(FamiliesTest, Minimums) {
  EXPECT_THROW(CompleteGraph(0), Error);
  EXPECT_THROW(CycleGraph(2), Error);
  EXPECT_THROW(PathGraph(0), Error);
  EXPECT_THROW(StarGraph(1), Error);
}

TEST(RngTest, UniformIndexStaysInRange) {
  Rng rng(Seed{3});
  std::vector<int> hits(7, 0);
  for (int t = 0; t < 7000; ++t) ++hits[rng.UniformIndex(7)];
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_THROW(rng.UniformIndex(0), Error);
  EXPECT_EQ(rng.UniformIndex(1), 0u);
}

TEST(RngTest, FixedStream) {
  // mt19937_64 with the default seed 5489 has a standard 10000th output.
  std::mt19937_64 engine;
  engine.discard(9999);
  EXPECT_EQ(engine(), 9981545732273789042ull);
  Rng a(Seed{42}), b(Seed{42});
  for (int t = 0; t < 100; ++t) {
    const double x = a.UniformDouble();
    EXPECT_EQ(x, b.UniformDouble());
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
}

TEST(ErdosRenyiTest, Extremes) {
  EXPECT_EQ(ErdosRenyi(20, 0.0, Seed{1}).edge_count(), 0u);
  EXPECT_EQ(ErdosRenyi(20, 1.0, Seed{1}), CompleteGraph(20));
  EXPECT_THROW(ErdosRenyi(5, 1.5, Seed{1}), Error);
  EXPECT_THROW(ErdosRenyi(5, -0.1, Seed{1}), Error);
  EXPECT_THROW(ErdosRenyi(5, NAN, Seed{1}), Error);
}

TEST(ErdosRenyiTest, Deterministic) {
  EXPECT_EQ(ErdosRenyi(100, 0.1, Seed{2024}), ErdosRenyi(100, 0.1, Seed{2024}));
  EXPECT_NE(ErdosRenyi(100, 0.1, Seed{2024}), ErdosRenyi(100, 0.1, Seed{2025}));
}

TEST(ErdosRenyiTest, MeanEdgeCountWithinThreeStandardErrors) {
  const std::size_t n = 40;
  const double p = 0.1;
  const double pairs = n * (n - 1) / 2.0;
  double sum = 0.0;
  for (std::uint64_t s = 0; s < 1000; ++s) sum += ErdosRenyi(n, p, Seed{s}).edge_count();
  const double mean = sum / 1000.0;
  const double standard_error = std::sqrt(pairs * p * (1 - p) / 1000.0);
  EXPECT_LT(std::abs(mean - p * pairs), 3.0 * standard_error);
}

TEST(RewireTest, ZeroFractionIsIdentity) {
  const Graph g = ErdosRenyi(30, 0.2, Seed{5});
  EXPECT_EQ(Rewire(g, 0.0, Seed{9}), g);
}

TEST(RewireTest, PreservesCounts) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = ErdosRenyi(25, 0.3, Seed{s});
    for (double f : {0.1, 0.5, 1.0}) {
      if (std::floor(f * g.edge_count()) > 25 * 24 / 2 - g.edge_count()) continue;
      const Graph r = Rewire(g, f, Seed{s + 100});
      EXPECT_EQ(r.node_count(), g.node_count());
      EXPECT_EQ(r.edge_count(), g.edge_count());
    }
  }
}

TEST(RewireTest, MovesExactlyTheRequestedEdges) {
  const Graph g = ErdosRenyi(40, 0.2, Seed{7});
  const Graph r = Rewire(g, 0.25, Seed{8});
  const std::set<Edge> before(g.edges().begin(), g.edges().end());
  std::size_t kept = 0;
  for (const Edge& e : r.edges()) kept += before.count(e);
  EXPECT_EQ(g.edge_count() - kept, static_cast<std::size_t>(std::floor(0.25 * g.edge_count())));
}

TEST(RewireTest, Errors) {
  EXPECT_THROW(Rewire(CompleteGraph(6), 0.2, Seed{1}), Error);
  EXPECT_THROW(Rewire(CycleGraph(6), 1.5, Seed{1}), Error);
  // K_5 minus one edge: one non-edge, nine edges; half would move four.
  Graph almost = Graph::FromEdgeList(
      std::vector<std::pair<NodeIndex, NodeIndex>>{
          {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}},
      5);
  EXPECT_THROW(Rewire(almost, 0.5, Seed{1}), Error);
  EXPECT_EQ(Rewire(almost, 0.12, Seed{1}).edge_count(), 9u);
}

TEST(RewireTest, KeepsLabels) {
  const Graph g = CycleGraph(5).WithLabels({"a", "b", "c", "d", "e"});
  EXPECT_EQ(Rewire(g, 0.4, Seed{3}).labels(), g.labels());
}

TEST(BlockCorrelationTest, TwoValuesWithoutJitter) {
  const auto cm = BlockCorrelation(BlocksFromSizes({3, 4}), 0.6, 0.1, 0.0, Seed{1});
  std::set<double> values;
  for (NodeIndex i = 0; i < 7; ++i) {
    EXPECT_EQ(cm.at(i, i), 1.0);
    for (NodeIndex j = i + 1; j < 7; ++j) values.insert(cm.at(i, j));
  }
  EXPECT_EQ(values, (std::set<double>{0.1, 0.6}));
  EXPECT_EQ(cm.at(0, 2), 0.6);
  EXPECT_EQ(cm.at(2, 3), 0.1);
}

TEST(BlockCorrelationTest, Reproducible) {
  const auto blocks = BlocksFromSizes({10, 10, 5});
  const auto a = BlockCorrelation(blocks, 0.5, 0.1, 0.05, Seed{77});
  EXPECT_EQ(a, BlockCorrelation(blocks, 0.5, 0.1, 0.05, Seed{77}));
  EXPECT_NE(a, BlockCorrelation(blocks, 0.5, 0.1, 0.05, Seed{78}));
  for (NodeIndex i = 0; i < 25; ++i) {
    for (NodeIndex j = 0; j < 25; ++j) {
      EXPECT_EQ(a.at(i, j), a.at(j, i));
      if (i == j) continue;
      const double centre = blocks[i] == blocks[j] ? 0.5 : 0.1;
      EXPECT_LE(std::abs(a.at(i, j) - centre), 0.05 + 1e-15);
    }
  }
}

TEST(BlockCorrelationTest, ParameterErrors) {
  const auto blocks = BlocksFromSizes({2, 2});
  EXPECT_THROW(BlockCorrelation(blocks, 0.1, 0.5, 0.0, Seed{1}), Error);
  EXPECT_THROW(BlockCorrelation(blocks, 0.95, 0.1, 0.1, Seed{1}), Error);
  EXPECT_THROW(BlockCorrelation(blocks, 0.5, 0.1, -0.1, Seed{1}), Error);
  EXPECT_THROW(BlockCorrelation({}, 0.5, 0.1, 0.0, Seed{1}), Error);
  EXPECT_THROW(BlocksFromSizes({3, 0}), Error);
}

TEST(PerturbCorrelationTest, BoundedAndReproducible) {
  const auto base = BlockCorrelation(BlocksFromSizes({6, 6}), 0.5, 0.1, 0.02, Seed{4});
  const auto p = PerturbCorrelation(base, 0.05, Seed{5});
  EXPECT_EQ(p, PerturbCorrelation(base, 0.05, Seed{5}));
  EXPECT_EQ(PerturbCorrelation(base, 0.0, Seed{5}), base);
  for (NodeIndex i = 0; i < 12; ++i) {
    EXPECT_EQ(p.at(i, i), 1.0);
    for (NodeIndex j = i + 1; j < 12; ++j) {
      EXPECT_EQ(p.at(i, j), p.at(j, i));
      EXPECT_LE(std::abs(p.at(i, j) - base.at(i, j)), 0.05 + 1e-15);
    }
  }
  EXPECT_THROW(PerturbCorrelation(base, -1.0, Seed{1}), Error);
}

}  // namespace
}  // namespace infoparity
