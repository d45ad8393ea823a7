#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polycover/cost.h"
#include "polycover/decomposition.h"
#include "polycover/sweep.h"
#include "polycover/visibility.h"

namespace polycover {

enum class NodeKind { kStart, kGoal, kSweep };

// One E-GTSP node: a sweep pattern of some cell, or a terminal point.
struct Node {
  int cluster = 0;
  NodeKind kind = NodeKind::kSweep;
  std::optional<SweepPattern> pattern;
  Point entry;
  Point exit;
  double intrinsic_cost = 0.0;
};

// Clustered directed graph. Node 0 is the start terminal (cluster 0), the
// last node is the goal terminal (last cluster); cell clusters lie between.
// Arc cost c(i, j) is the transition cost from exit(i) to entry(j) plus the
// intrinsic cost of j.
class AdjacencyGraph {
 public:
  static constexpr double kNoArc = std::numeric_limits<double>::infinity();

  AdjacencyGraph() = default;
  // `costs` is row-major n x n; `arc_paths` indexes into `paths` (-1: none).
  AdjacencyGraph(std::vector<Node> nodes, std::vector<double> costs,
                 std::vector<std::int32_t> arc_paths, std::vector<Polyline> paths,
                 std::shared_ptr<const FreeSpace> free_space);

  // Abstract instance without geometry. cluster_of[0] must be the unique start
  // node, the last entry the unique goal node.
  static AdjacencyGraph fromCosts(const std::vector<int>& cluster_of,
                                  const std::vector<std::vector<double>>& costs);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  std::size_t startNode() const { return 0; }
  std::size_t goalNode() const { return nodes_.size() - 1; }

  const std::vector<std::vector<std::size_t>>& clusters() const { return clusters_; }
  std::size_t clusterCount() const { return clusters_.size(); }
  // Number of clusters excluding the two terminals.
  std::size_t cellClusterCount() const { return clusters_.size() - 2; }

  double cost(std::size_t i, std::size_t j) const { return costs_[i * size() + j]; }
  bool hasArc(std::size_t i, std::size_t j) const { return cost(i, j) < kNoArc; }
  std::size_t arcCount() const;
  // Stored transition polyline for arc (i, j); nullptr for abstract graphs.
  const Polyline* transition(std::size_t i, std::size_t j) const;

  const std::shared_ptr<const FreeSpace>& freeSpace() const { return free_space_; }

  // Keeps the listed nodes (must include both terminals), in order.
  AdjacencyGraph subgraph(const std::vector<std::size_t>& keep) const;

 private:
  std::vector<Node> nodes_;
  std::vector<std::vector<std::size_t>> clusters_;
  std::vector<double> costs_;
  std::vector<std::int32_t> arc_paths_;
  std::vector<Polyline> paths_;
  std::shared_ptr<const FreeSpace> free_space_;
};

// Sweep nodes for every cell (cluster = position in `patterns_per_cell` + 1)
// framed by the two terminals.
std::vector<Node> makeNodes(const std::vector<std::vector<SweepPattern>>& patterns_per_cell,
                            const Point& start, const Point& goal,
                            const CostModel& model);

// Drops node i of a cluster when some surviving sibling j satisfies
// cost(entry_i -> entry_j) + t_j + cost(exit_j -> exit_i) <= t_i.
std::vector<Node> pruneNodes(std::vector<Node> nodes, const FreeSpace& space,
                             const CostModel& model);

// Connects every pair of nodes in different clusters (no start->goal arc)
// through Euclidean shortest paths. `threads` = 0 picks the hardware count.
AdjacencyGraph connectNodes(std::vector<Node> nodes,
                            std::shared_ptr<const FreeSpace> space,
                            const CostModel& model, unsigned threads = 0);

// Sweep patterns of all cells as nodes plus terminals, densely connected.
AdjacencyGraph buildGraph(std::shared_ptr<const FreeSpace> space,
                          std::span<const Cell> cells, double sweep_distance,
                          const Point& start, const Point& goal,
                          const CostModel& model, unsigned threads = 0);

// Removes dominated nodes (and their arcs) from a built graph.
AdjacencyGraph pruneDominated(const AdjacencyGraph& graph, const CostModel& model);

enum class SolverKind { kExact, kMemetic };

std::string toString(SolverKind kind);
SolverKind solverKindFromString(const std::string& name);

struct Solution {
  std::vector<std::size_t> sequence;  // start, one node per cell cluster, goal
  double cost = 0.0;
  SolverKind solver = SolverKind::kMemetic;
  double wall_time = 0.0;
  // Best cost after each memetic generation.
  std::vector<double> history;
};

// True iff the sequence runs start -> one node of every cell cluster -> goal
// along existing arcs.
bool isFeasible(const AdjacencyGraph& graph, std::span<const std::size_t> sequence);
double sequenceCost(const AdjacencyGraph& graph, std::span<const std::size_t> sequence);

struct ExactOptions {
  std::size_t max_states = std::size_t{1} << 20;
  double time_limit_s = std::numeric_limits<double>::infinity();
};

// Dijkstra over (node, visited cluster set). Throws kIntractable when the
// product state count exceeds the budget or the time limit is hit.
Solution solveExact(const AdjacencyGraph& graph, const ExactOptions& options = {});

struct MemeticOptions {
  int population_size = 24;
  int max_generations = 500;
  int stagnation_generations = 25;
  double time_limit_s = 60.0;
  double mutation_rate = 0.2;
};

// Memetic search over cluster orders; each order is scored with its optimal
// node choice. Deterministic for a fixed seed unless the time limit hits.
Solution solveMemetic(const AdjacencyGraph& graph, std::uint64_t seed,
                      const MemeticOptions& options = {});

// Optimal node per cluster for a fixed cluster order (layered shortest
// path). `order` lists cell clusters; returns the full node sequence.
std::vector<std::size_t> optimizeClusters(const AdjacencyGraph& graph,
                                          std::span<const std::size_t> order,
                                          double* cost = nullptr);

// Plain-text dump: header, cluster membership, dense rows (1e18 = no arc).
void writeGtspMatrix(std::ostream& out, const AdjacencyGraph& graph);
AdjacencyGraph readGtspMatrix(std::istream& in);

}  // namespace polycover
