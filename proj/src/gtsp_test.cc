#include "polycover/gtsp.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "oracles.h"
#include "polycover/error.h"
#include "polycover/map_generator.h"

namespace polycover {
namespace {

Ring rect(double x0, double y0, double x1, double y1) {
  return Ring({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

AdjacencyGraph graphFor(const PolygonWithHoles& pwh, double sweep_distance, const Point& start,
                        const Point& goal, const CostModel& model = {}) {
  auto space = std::make_shared<const FreeSpace>(pwh);
  const Decomposition d = bestDecomposition(pwh, DecompositionKind::kBcd);
  return buildGraph(space, d.cells, sweep_distance, start, goal, model, 1);
}

TEST(Graph, ConvexSquare) {
  const AdjacencyGraph g = graphFor(PolygonWithHoles(rect(0, 0, 10, 10)), 10.0, {0, 0}, {0, 0});
  EXPECT_EQ(g.size(), 10u);
  EXPECT_EQ(g.clusterCount(), 3u);
  EXPECT_EQ(g.cellClusterCount(), 1u);
  EXPECT_EQ(g.arcCount(), 16u);
  EXPECT_EQ(g.node(0).kind, NodeKind::kStart);
  EXPECT_EQ(g.node(9).kind, NodeKind::kGoal);
  EXPECT_FALSE(g.hasArc(0, 9));
  EXPECT_FALSE(g.hasArc(1, 2));
  EXPECT_FALSE(g.hasArc(9, 1));
}

TEST(Graph, ArcCostsRecomputed) {
  const PolygonWithHoles pwh(rect(0, 0, 30, 20), {rect(10, 8, 20, 12)});
  const FreeSpace fs(pwh);
  for (const CostModel& model : {CostModel{}, CostModel::distance()}) {
    const AdjacencyGraph g = graphFor(pwh, 4.0, {0, 0}, {30, 20}, model);
    bool asymmetric = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Node& a = g.node(i);
      if (a.pattern) EXPECT_NEAR(a.intrinsic_cost, polylineCost(a.pattern->path, model), 1e-9);
      for (std::size_t j = 0; j < g.size(); ++j) {
        const Node& b = g.node(j);
        const bool arc = a.cluster != b.cluster && i != g.goalNode() && j != 0 &&
                         !(i == 0 && j == g.goalNode());
        ASSERT_EQ(g.hasArc(i, j), arc) << i << " " << j;
        if (!arc) continue;
        const double expected = polylineCost(fs.shortestPath(a.exit, b.entry), model) + b.intrinsic_cost;
        EXPECT_NEAR(g.cost(i, j), expected, 1e-6 * std::max(1.0, expected));
        ASSERT_NE(g.transition(i, j), nullptr);
        EXPECT_TRUE(nearlyEqual(g.transition(i, j)->front(), a.exit));
        EXPECT_TRUE(nearlyEqual(g.transition(i, j)->back(), b.entry));
        if (g.hasArc(j, i) && std::abs(g.cost(i, j) - g.cost(j, i)) > 1e-6) asymmetric = true;
      }
    }
    EXPECT_TRUE(asymmetric);
  }
}

TEST(Pruning, LongCorridorKeepsOnlyLengthwiseSweeps) {
  const PolygonWithHoles pwh(rect(0, 0, 100, 2));
  const AdjacencyGraph g = graphFor(pwh, 1.0, {0, 0}, {0, 0});
  const AdjacencyGraph pruned = pruneDominated(g, CostModel{});
  ASSERT_EQ(pruned.cellClusterCount(), 1u);
  EXPECT_LT(pruned.size(), g.size());
  for (const Node& n : pruned.nodes()) {
    if (n.pattern) EXPECT_EQ(n.pattern->sweep_direction, Direction(0.0));
  }
  EXPECT_NEAR(solveExact(pruned).cost, solveExact(g).cost, 1e-9);
}

TEST(Pruning, RemovedNodesAreDominatedAndOptimumKept) {
  for (int m = 0; m < 12; ++m) {
    const MapFile map = generateMap(m % 4, 3, static_cast<std::uint64_t>(m));
    const Point start = map.polygon.outer()[0];
    const AdjacencyGraph g = graphFor(map.polygon, 10.0, start, start);
    const AdjacencyGraph pruned = pruneDominated(g, CostModel{});
    ASSERT_EQ(pruned.clusterCount(), g.clusterCount());
    for (const auto& c : pruned.clusters()) EXPECT_FALSE(c.empty());

    const FreeSpace& fs = *g.freeSpace();
    auto t = [&](const Point& a, const Point& b) { return polylineCost(fs.shortestPath(a, b), {}); };
    std::size_t k = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Node& a = g.node(i);
      const bool kept = k < pruned.size() && pruned.node(k).entry == a.entry &&
                        pruned.node(k).exit == a.exit && pruned.node(k).cluster == a.cluster;
      if (kept) {
        ++k;
        continue;
      }
      bool dominated = false;
      for (const Node& b : pruned.nodes()) {
        if (b.cluster != a.cluster) continue;
        dominated |= t(a.entry, b.entry) + b.intrinsic_cost + t(b.exit, a.exit) <=
                     a.intrinsic_cost + 1e-9;
      }
      EXPECT_TRUE(dominated) << map.name << " node " << i;
    }
    EXPECT_EQ(k, pruned.size());
    EXPECT_NEAR(solveExact(pruned).cost, solveExact(g).cost, 1e-6) << map.name;
  }
}

TEST(Exact, MatchesBruteForce) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int clusters = 1 + trial % 6;
    const AdjacencyGraph g = oracle::randomInstance(rng, clusters, trial < 20 ? 2 : 4);
    const Solution s = solveExact(g);
    EXPECT_NEAR(s.cost, oracle::bruteForceGtsp(g), 1e-9);
    EXPECT_TRUE(isFeasible(g, s.sequence));
    EXPECT_NEAR(sequenceCost(g, s.sequence), s.cost, 1e-9);
    EXPECT_EQ(s.solver, SolverKind::kExact);
  }
}

TEST(Exact, SingleClusterPicksCheapestNode) {
  // start -> {1, 2} -> goal.
  std::vector<std::vector<double>> c(4, std::vector<double>(4, 50.0));
  c[0][1] = 5;
  c[1][3] = 7;
  c[0][2] = 1;
  c[2][3] = 20;
  const AdjacencyGraph g = AdjacencyGraph::fromCosts({0, 1, 1, 2}, c);
  const Solution s = solveExact(g);
  EXPECT_EQ(s.sequence, (std::vector<std::size_t>{0, 1, 3}));
  EXPECT_DOUBLE_EQ(s.cost, 12.0);
}

TEST(Exact, Intractable) {
  std::mt19937_64 rng(1);
  const AdjacencyGraph big = oracle::randomInstance(rng, 40, 1);
  try {
    solveExact(big);
    FAIL();
  } catch (const CoverageError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIntractable);
  }
  const AdjacencyGraph g = oracle::randomInstance(rng, 10, 3);
  ExactOptions tight;
  tight.max_states = 1000;
  EXPECT_THROW(solveExact(g, tight), CoverageError);
}

TEST(Memetic, DeterministicFeasibleMonotone) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const AdjacencyGraph g = oracle::randomInstance(rng, 12, 4);
    const Solution a = solveMemetic(g, 99);
    const Solution b = solveMemetic(g, 99);
    EXPECT_EQ(a.sequence, b.sequence);
    EXPECT_EQ(a.cost, b.cost);
    EXPECT_EQ(a.history, b.history);
    EXPECT_TRUE(isFeasible(g, a.sequence));
    EXPECT_NEAR(sequenceCost(g, a.sequence), a.cost, 1e-9);
    ASSERT_FALSE(a.history.empty());
    for (std::size_t i = 1; i < a.history.size(); ++i) EXPECT_LE(a.history[i], a.history[i - 1]);
    EXPECT_EQ(a.history.back(), a.cost);
    EXPECT_GE(a.cost, solveExact(g).cost - 1e-9);
  }
}

TEST(Memetic, OptimalOnSmallInstances) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const AdjacencyGraph g = oracle::randomInstance(rng, 1 + trial % 5, 3);
    EXPECT_NEAR(solveMemetic(g, 1).cost, oracle::bruteForceGtsp(g), 1e-9);
  }
}

TEST(OptimizeClusters, MatchesEnumerationOfNodeChoices) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const AdjacencyGraph g = oracle::randomInstance(rng, 4, 3);
    std::vector<std::size_t> order{1, 2, 3, 4};
    std::shuffle(order.begin(), order.end(), rng);
    double cost = 0.0;
    const auto seq = optimizeClusters(g, order, &cost);
    double best = std::numeric_limits<double>::infinity();
    const auto& cl = g.clusters();
    for (std::size_t a : cl[order[0]])
      for (std::size_t b : cl[order[1]])
        for (std::size_t c : cl[order[2]])
          for (std::size_t d : cl[order[3]]) {
            const std::vector<std::size_t> s{0, a, b, c, d, g.goalNode()};
            best = std::min(best, sequenceCost(g, s));
          }
    EXPECT_NEAR(cost, best, 1e-9);
    EXPECT_NEAR(sequenceCost(g, seq), best, 1e-9);
  }
  const AdjacencyGraph g = oracle::randomInstance(rng, 3, 2);
  const std::vector<std::size_t> bad{1, 1, 2};
  EXPECT_THROW(optimizeClusters(g, bad), CoverageError);
}

TEST(Feasibility, Rejects) {
  std::mt19937_64 rng(37);
  const AdjacencyGraph g = oracle::randomInstance(rng, 3, 1);
  EXPECT_TRUE(isFeasible(g, std::vector<std::size_t>{0, 1, 2, 3, 4}));
  EXPECT_FALSE(isFeasible(g, std::vector<std::size_t>{0, 1, 2, 4}));
  EXPECT_FALSE(isFeasible(g, std::vector<std::size_t>{0, 1, 1, 2, 4}));
  EXPECT_FALSE(isFeasible(g, std::vector<std::size_t>{1, 0, 2, 3, 4}));
}

TEST(GtspMatrix, RoundTrip) {
  std::mt19937_64 rng(41);
  const AdjacencyGraph g = oracle::randomInstance(rng, 5, 3);
  std::stringstream ss;
  writeGtspMatrix(ss, g);
  const AdjacencyGraph back = readGtspMatrix(ss);
  ASSERT_EQ(back.size(), g.size());
  EXPECT_EQ(back.clusters(), g.clusters());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      ASSERT_EQ(back.hasArc(i, j), g.hasArc(i, j));
      if (g.hasArc(i, j)) EXPECT_EQ(back.cost(i, j), g.cost(i, j));
    }
  }
  std::stringstream junk("POLYCOVER_GTSP 2\n");
  EXPECT_THROW(readGtspMatrix(junk), CoverageError);
}

TEST(SolverKind, Names) {
  EXPECT_EQ(solverKindFromString("exact"), SolverKind::kExact);
  EXPECT_EQ(solverKindFromString(toString(SolverKind::kMemetic)), SolverKind::kMemetic);
  EXPECT_THROW(solverKindFromString("greedy"), CoverageError);
}

}  // namespace
}  // namespace polycover
