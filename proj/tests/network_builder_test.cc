#include "infoparity/network_builder.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "infoparity/error.h"
#include "test_support.h"

namespace infoparity {
namespace {

using ::infoparity::testing::RandomCorrelation;

std::set<Edge> EdgeSet(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

TEST(PearsonTest, PerfectRelations) {
  const auto cm = PearsonCorrelation({{1, 2, 3}, {2, 4, 6}, {3, 2, 1}});
  EXPECT_NEAR(cm.at(0, 1), 1.0, 1e-15);
  EXPECT_NEAR(cm.at(0, 2), -1.0, 1e-15);
  EXPECT_EQ(cm.at(1, 1), 1.0);
}

TEST(PearsonTest, ZeroVarianceNamesNode) {
  try {
    PearsonCorrelation({{0.5, 0.1, 0.3}, {1, 1, 1}}, {"x", "flat"});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("flat"), std::string::npos) << e.what();
  }
}

TEST(PearsonTest, ShapeErrors) {
  EXPECT_THROW(PearsonCorrelation({{1, 2, 3}, {1, 2}}), Error);
  EXPECT_THROW(PearsonCorrelation({{1}, {2}}), Error);
  EXPECT_THROW(PearsonCorrelation({{1, NAN, 3}, {1, 2, 4}}), Error);
}

TEST(PearsonTest, KnownValue) {
  // Centered cross product 4, squared norms 5 each.
  const auto cm = PearsonCorrelation({{1, 2, 3, 4}, {1, 3, 2, 4}});
  EXPECT_NEAR(cm.at(0, 1), 0.8, 1e-15);
}

TEST(PearsonTest, SymmetricBoundedAndAffineInvariant) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 12, t = 30;
    std::vector<std::vector<double>> series(n, std::vector<double>(t));
    for (auto& s : series) {
      for (auto& x : s) x = u(rng);
    }
    const auto cm = PearsonCorrelation(series);
    auto shifted = series;
    for (std::size_t v = 0; v < n; ++v) {
      const double scale = 0.01 + 100.0 * std::abs(u(rng));
      const double shift = 1000.0 * u(rng);
      for (auto& x : shifted[v]) x = scale * x + shift;
    }
    const auto cm2 = PearsonCorrelation(shifted);
    for (NodeIndex i = 0; i < n; ++i) {
      EXPECT_EQ(cm.at(i, i), 1.0);
      for (NodeIndex j = 0; j < n; ++j) {
        EXPECT_EQ(cm.at(i, j), cm.at(j, i));
        EXPECT_LE(std::abs(cm.at(i, j)), 1.0 + 1e-12);
        EXPECT_NEAR(cm.at(i, j), cm2.at(i, j), 1e-12);
      }
    }
  }
}

TEST(CorrelationMatrixTest, SymmetrizesWithinTolerance) {
  const auto cm = CorrelationMatrix::FromRows({{1, 0.3 + 4e-10}, {0.3, 1}});
  EXPECT_EQ(cm.at(0, 1), cm.at(1, 0));
  EXPECT_NEAR(cm.at(0, 1), 0.3, 1e-9);
}

TEST(CorrelationMatrixTest, RejectsMalformed) {
  EXPECT_THROW(CorrelationMatrix::FromRows({{1, 0.3}, {0.2, 1}}), Error);
  EXPECT_THROW(CorrelationMatrix::FromRows({{1, 1.5}, {1.5, 1}}), Error);
  EXPECT_THROW(CorrelationMatrix::FromRows({{1, 0.3}}), Error);
  EXPECT_THROW(CorrelationMatrix::FromRows({{1, INFINITY}, {INFINITY, 1}}), Error);
  EXPECT_THROW(CorrelationMatrix::FromRows({{1, 0.1}, {0.1, 1}}, {"a"}), Error);
}

TEST(CorrelationMatrixTest, ClampsSlightOverflow) {
  const auto cm = CorrelationMatrix::FromRows({{1, 1 + 5e-10}, {1 + 5e-10, 1}});
  EXPECT_EQ(cm.at(0, 1), 1.0);
}

TEST(ThresholdByValueTest, Examples) {
  const auto cm = CorrelationMatrix::FromRows({{1, 0.9, -0.5}, {0.9, 1, 0.2}, {-0.5, 0.2, 1}});
  EXPECT_EQ(ThresholdByValue(cm, 0.0).edge_count(), 3u);
  EXPECT_EQ(ThresholdByValue(cm, 1.0).edge_count(), 0u);
  EXPECT_EQ(ThresholdByValue(cm, 1.5).edge_count(), 0u);
  const Graph g = ThresholdByValue(cm, 0.4);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.HasEdge(0, 1));
  EXPECT_TRUE(g.HasEdge(0, 2));
}

TEST(ThresholdByValueTest, StrictInequality) {
  const auto cm = CorrelationMatrix::FromRows({{1, 0.5}, {0.5, 1}});
  EXPECT_EQ(ThresholdByValue(cm, 0.5).edge_count(), 0u);
  EXPECT_THROW(ThresholdByValue(cm, -0.1), Error);
}

TEST(DensityTargetTest, EdgeCountArithmetic) {
  EXPECT_EQ(DensityTarget::ForMeanDegree(2, 4).edge_count, 4u);
  EXPECT_EQ(DensityTarget::ForMeanDegree(28, 104).edge_count, 1456u);
  EXPECT_EQ(DensityTarget::ForMeanDegree(3, 5).edge_count, 8u);  // 7.5 rounds up
  EXPECT_EQ(DensityTarget::ForEdgeCount(6, 4).edge_count, 6u);
}

TEST(DensityTargetTest, OutOfRange) {
  EXPECT_THROW(DensityTarget::ForMeanDegree(0.1, 4), Error);
  EXPECT_THROW(DensityTarget::ForMeanDegree(4, 4), Error);
  EXPECT_THROW(DensityTarget::ForEdgeCount(0, 4), Error);
  EXPECT_THROW(DensityTarget::ForEdgeCount(7, 4), Error);
  EXPECT_THROW(DensityTarget::ForMeanDegree(-2, 10), Error);
}

TEST(ThresholdToDensityTest, ExactCountUnderAllTies) {
  std::vector<std::vector<double>> rows(4, std::vector<double>(4, 0.5));
  for (int i = 0; i < 4; ++i) rows[i][i] = 1.0;
  const auto cm = CorrelationMatrix::FromRows(rows);
  const Graph g = ThresholdToDensity(cm, DensityTarget::ForMeanDegree(2, 4));
  EXPECT_EQ(g.edge_count(), 4u);
  // Lexicographic tie-break keeps the first four pairs.
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}}));
}

TEST(ThresholdToDensityTest, TieAtCutKeepsSmallerPair) {
  // (0,1) strongest, then (0,2) and (1,2) tied; room for one of them.
  const auto cm = CorrelationMatrix::FromRows({{1, 0.9, 0.4}, {0.9, 1, -0.4}, {0.4, -0.4, 1}});
  const Graph g = ThresholdToDensity(cm, DensityTarget::ForEdgeCount(2, 3));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
}

TEST(ThresholdToDensityTest, UsesAbsoluteValue) {
  const auto cm = CorrelationMatrix::FromRows({{1, -0.9, 0.1}, {-0.9, 1, 0.2}, {0.1, 0.2, 1}});
  EXPECT_EQ(ThresholdToDensity(cm, DensityTarget::ForEdgeCount(1, 3)).edges(),
            (std::vector<Edge>{{0, 1}}));
}

TEST(ThresholdToDensityTest, ExactCountOnRandomTiedMatrices) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 5 + trial % 20;
    const auto cm = trial % 2 ? RandomCorrelation(n, rng, {-0.5, 0.0, 0.5, 0.7})
                              : RandomCorrelation(n, rng);
    const std::size_t max_m = n * (n - 1) / 2;
    for (std::size_t m : {std::size_t{1}, max_m / 3 + 1, max_m / 2, max_m}) {
      const Graph g = ThresholdToDensity(cm, DensityTarget::ForEdgeCount(m, n));
      ASSERT_EQ(g.edge_count(), m);
    }
  }
}

TEST(ThresholdToDensityTest, AgreesWithValueThresholdWhenDistinct) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 6 + trial % 15;
    const auto cm = RandomCorrelation(n, rng);
    std::vector<double> strengths;
    for (NodeIndex i = 0; i < n; ++i) {
      for (NodeIndex j = i + 1; j < n; ++j) strengths.push_back(std::abs(cm.at(i, j)));
    }
    std::sort(strengths.rbegin(), strengths.rend());
    ASSERT_EQ(std::adjacent_find(strengths.begin(), strengths.end()), strengths.end());
    for (std::size_t m = 1; m < strengths.size(); m += 3) {
      const double tau = strengths[m];  // (M+1)-th largest
      EXPECT_EQ(ThresholdToDensity(cm, DensityTarget::ForEdgeCount(m, n)), ThresholdByValue(cm, tau));
    }
  }
}

TEST(RankPairsTest, OrderAndCoverage) {
  const auto cm = CorrelationMatrix::FromRows({{1, 0.2, -0.8}, {0.2, 1, 0.2}, {-0.8, 0.2, 1}});
  EXPECT_EQ(RankPairsByStrength(cm), (std::vector<Edge>{{0, 2}, {0, 1}, {1, 2}}));
}

TEST(DensitySweepTest, NestedForAnyOrder) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 20;
    const auto cm = RandomCorrelation(n, rng, trial % 2 ? std::vector<double>{0.1, 0.3} : std::vector<double>{});
    std::vector<DensityTarget> targets;
    for (double k : {6.0, 2.0, 10.0, 4.0, 8.0}) targets.push_back(DensityTarget::ForMeanDegree(k, n));
    const auto sweep = DensitySweep(cm, targets);
    ASSERT_EQ(sweep.size(), targets.size());
    for (const auto& a : sweep) {
      EXPECT_EQ(a.connected, ConnectedComponents(a.graph).connected());
      for (const auto& b : sweep) {
        if (a.target.edge_count >= b.target.edge_count) continue;
        const auto small = EdgeSet(a.graph), large = EdgeSet(b.graph);
        EXPECT_TRUE(std::includes(large.begin(), large.end(), small.begin(), small.end()));
      }
    }
  }
}

TEST(DensitySweepTest, SingleTargetMatchesDirect) {
  std::mt19937_64 rng(8);
  const auto cm = RandomCorrelation(15, rng);
  const auto t = DensityTarget::ForMeanDegree(4, 15);
  const auto sweep = DensitySweep(cm, {t});
  ASSERT_EQ(sweep.size(), 1u);
  EXPECT_EQ(sweep[0].graph, ThresholdToDensity(cm, t));
  EXPECT_EQ(sweep[0].target, t);
}

TEST(DensitySweepTest, DefaultGridOn104Nodes) {
  std::mt19937_64 rng(104);
  const auto cm = RandomCorrelation(104, rng);
  const auto grid = MeanDegreeGrid(8, 40, 4);
  ASSERT_EQ(grid.size(), 9u);
  std::vector<DensityTarget> targets;
  for (double k : grid) targets.push_back(DensityTarget::ForMeanDegree(k, 104));
  const auto sweep = DensitySweep(cm, targets);
  for (std::size_t s = 0; s < sweep.size(); ++s) {
    const std::size_t expected = 416 + 208 * s;
    EXPECT_EQ(sweep[s].graph.edge_count(), expected);
    EXPECT_DOUBLE_EQ(MeanDegree(sweep[s].graph), grid[s]);
  }
  EXPECT_EQ(sweep.back().graph.edge_count(), 2080u);
}

TEST(DensitySweepTest, EmptyTargetsRejected) {
  std::mt19937_64 rng(1);
  EXPECT_THROW(DensitySweep(RandomCorrelation(5, rng), {}), Error);
}

TEST(MeanDegreeGridTest, Arithmetic) {
  EXPECT_EQ(MeanDegreeGrid(8, 40, 4), (std::vector<double>{8, 12, 16, 20, 24, 28, 32, 36, 40}));
  EXPECT_EQ(MeanDegreeGrid(0.5, 1.0, 0.1).size(), 6u);
  EXPECT_EQ(MeanDegreeGrid(5, 5, 1), (std::vector<double>{5}));
  EXPECT_THROW(MeanDegreeGrid(5, 4, 1), Error);
  EXPECT_THROW(MeanDegreeGrid(1, 4, 0), Error);
}

}  // namespace
}  // namespace infoparity
