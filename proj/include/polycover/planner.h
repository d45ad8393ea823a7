#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "polycover/cost.h"
#include "polycover/decomposition.h"
#include "polycover/gtsp.h"
#include "polycover/sweep.h"
#include "polycover/visibility.h"

namespace polycover {

struct PlannerConfig {
  DecompositionKind decomposition = DecompositionKind::kBcd;
  CostModel cost;
  double sweep_distance = 10.0;
  double wall_distance = 0.0;
  SolverKind solver = SolverKind::kMemetic;
  std::uint64_t seed = 0;
  // Both default to the first vertex of the offset outer ring.
  std::optional<Point> start;
  std::optional<Point> goal;
  bool prune = true;
  ExactOptions exact;
  MemeticOptions memetic;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Seconds per pipeline stage.
struct StageTimings {
  double cells = 0.0;    // offset and decomposition
  double sweeps = 0.0;   // visibility graph and sweep patterns
  double nodes = 0.0;
  double pruning = 0.0;
  double edges = 0.0;
  double solve = 0.0;

  double total() const { return cells + sweeps + nodes + pruning + edges + solve; }
};

struct PlanStats {
  std::size_t cells = 0;
  std::size_t nodes = 0;  // after pruning
  std::size_t arcs = 0;
  StageTimings timings;
};

struct CoveragePath {
  Polyline path;
  std::vector<SegmentTag> tags;  // one per segment of `path`
  double total_cost = 0.0;
  PlanStats stats;
  // Offset free space the path lives in, its decomposition and the chosen
  // pattern of every cell in visiting order.
  std::shared_ptr<const FreeSpace> free_space;
  Decomposition decomposition;
  std::vector<SweepPattern> patterns;
  std::shared_ptr<const AdjacencyGraph> graph;  // after pruning
  Solution solution;
};

// Offset, decompose along the best direction, enumerate sweep patterns,
// build and prune the E-GTSP graph, solve, and stitch the path together.
// Errors carry the name of the failing stage.
CoveragePath plan(const PolygonWithHoles& pwh, const PlannerConfig& config);

// Baseline: the same decomposition as plan(), but one fixed pattern per cell
// (swept perpendicular to the scan direction, CCW start, bottom-up).
CoveragePath planOneDirection(const PolygonWithHoles& pwh, const PlannerConfig& config);

}  // namespace polycover
