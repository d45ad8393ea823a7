#include "polycover/planner.h"

#include <chrono>
#include <cmath>
#include <string>

#include "parallel.h"

namespace polycover {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

// Runs `fn`, tagging any library error with the stage name.
template <typename Fn>
auto stage(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const CoverageError& e) {
    if (!e.stage().empty()) throw;
    throw e.withStage(name);
  }
}

void validate(const PlannerConfig& config) {
  if (!(config.sweep_distance > 0.0) || !std::isfinite(config.sweep_distance)) {
    throw CoverageError(ErrorKind::kInvalidInput, "sweep distance must be positive", "config");
  }
  if (!(config.wall_distance >= 0.0) || !std::isfinite(config.wall_distance)) {
    throw CoverageError(ErrorKind::kInvalidInput, "wall distance must be nonnegative",
                        "config");
  }
}

struct Terminals {
  Point start;
  Point goal;
};

Terminals terminals(const PolygonWithHoles& free, const PlannerConfig& config) {
  const Point fallback = free.outer()[0];
  Terminals t{config.start.value_or(fallback), config.goal.value_or(fallback)};
  for (const Point* p : {&t.start, &t.goal}) {
    if (!std::isfinite(p->x) || !std::isfinite(p->y) || !contains(free, *p)) {
      throw CoverageError(ErrorKind::kInvalidInput,
                          "start/goal point lies outside the offset free space", "terminals");
    }
  }
  return t;
}

Solution solve(const AdjacencyGraph& graph, const PlannerConfig& config) {
  return config.solver == SolverKind::kExact ? solveExact(graph, config.exact)
                                             : solveMemetic(graph, config.seed, config.memetic);
}

// Stitches terminals, transitions and patterns along the solution.
void assemble(const AdjacencyGraph& graph, CoveragePath& out) {
  const auto& seq = out.solution.sequence;
  out.path.waypoints = {graph.node(seq.front()).exit};
  out.tags.clear();
  auto append = [&](const Polyline& p, const std::vector<SegmentTag>* tags, SegmentTag tag) {
    for (std::size_t i = 1; i < p.waypoints.size(); ++i) {
      out.path.waypoints.push_back(p.waypoints[i]);
      out.tags.push_back(tags ? (*tags)[i - 1] : tag);
    }
  };
  for (std::size_t k = 1; k < seq.size(); ++k) {
    const Polyline* transition = graph.transition(seq[k - 1], seq[k]);
    if (transition) append(*transition, nullptr, SegmentTag::kTransition);
    const Node& node = graph.node(seq[k]);
    if (node.pattern) {
      append(node.pattern->path, &node.pattern->tags, SegmentTag::kSweep);
      out.patterns.push_back(*node.pattern);
    }
  }
}

// Shared tail of both planners: nodes, pruning, arcs, solve, assembly.
CoveragePath solvePatterns(std::shared_ptr<const FreeSpace> space, Decomposition decomposition,
                           const std::vector<std::vector<SweepPattern>>& patterns,
                           const Terminals& ends, const PlannerConfig& config,
                           StageTimings timings) {
  CoveragePath out;
  auto t = Clock::now();
  std::vector<Node> nodes = stage("nodes", [&] {
    return makeNodes(patterns, ends.start, ends.goal, config.cost);
  });
  timings.nodes = since(t);

  t = Clock::now();
  if (config.prune) {
    nodes = stage("pruning", [&] { return pruneNodes(std::move(nodes), *space, config.cost); });
  }
  timings.pruning = since(t);

  t = Clock::now();
  auto graph = std::make_shared<const AdjacencyGraph>(stage("edges", [&] {
    return connectNodes(std::move(nodes), space, config.cost, config.threads);
  }));
  timings.edges = since(t);

  t = Clock::now();
  out.solution = stage("solve", [&] { return solve(*graph, config); });
  timings.solve = since(t);

  assemble(*graph, out);
  out.total_cost = out.solution.cost;
  out.stats.cells = decomposition.cells.size();
  out.stats.nodes = graph->size() - 2;
  out.stats.arcs = graph->arcCount();
  out.graph = std::move(graph);
  out.stats.timings = timings;
  out.free_space = std::move(space);
  out.decomposition = std::move(decomposition);
  return out;
}

}  // namespace

CoveragePath plan(const PolygonWithHoles& pwh, const PlannerConfig& config) {
  validate(config);
  StageTimings timings;
  auto t = Clock::now();
  const PolygonWithHoles free =
      stage("offset", [&] { return offsetInward(pwh, config.wall_distance); });
  Decomposition decomposition =
      stage("cells", [&] { return bestDecomposition(free, config.decomposition); });
  timings.cells = since(t);

  const Terminals ends = terminals(free, config);

  t = Clock::now();
  auto space = std::make_shared<const FreeSpace>(free);
  std::vector<std::vector<SweepPattern>> patterns(decomposition.cells.size());
  stage("sweeps", [&] {
    internal::parallelFor(patterns.size(), config.threads, [&](std::size_t i) {
      patterns[i] = allPatterns(decomposition.cells[i], space->graph(), space->polygon(),
                                config.sweep_distance);
    });
    return 0;
  });
  timings.sweeps = since(t);

  return solvePatterns(std::move(space), std::move(decomposition), patterns, ends, config,
                       timings);
}

CoveragePath planOneDirection(const PolygonWithHoles& pwh, const PlannerConfig& config) {
  validate(config);
  StageTimings timings;
  auto t = Clock::now();
  const PolygonWithHoles free =
      stage("offset", [&] { return offsetInward(pwh, config.wall_distance); });
  Decomposition decomposition =
      stage("cells", [&] { return bestDecomposition(free, config.decomposition); });
  const Terminals ends = terminals(free, config);
  timings.cells = since(t);

  t = Clock::now();
  auto space = std::make_shared<const FreeSpace>(free);
  constexpr SweepVariant kFixed{StartSide::kCounterClockwise, SweepOrder::kBottomUp};
  std::vector<std::vector<SweepPattern>> patterns;
  stage("sweeps", [&] {
    for (const Cell& cell : decomposition.cells) {
      patterns.push_back({pattern(cell, cell.monotone_axis.perpendicular(), kFixed,
                                  space->graph(), space->polygon(), config.sweep_distance)});
    }
    return 0;
  });
  timings.sweeps = since(t);
  return solvePatterns(std::move(space), std::move(decomposition), patterns, ends, config,
                       timings);
}

}  // namespace polycover
