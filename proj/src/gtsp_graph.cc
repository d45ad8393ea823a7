#include <algorithm>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "parallel.h"
#include "polycover/gtsp.h"

namespace polycover {

std::string toString(SolverKind kind) {
  return kind == SolverKind::kExact ? "exact" : "memetic";
}

SolverKind solverKindFromString(const std::string& name) {
  if (name == "exact") return SolverKind::kExact;
  if (name == "memetic") return SolverKind::kMemetic;
  throw CoverageError(ErrorKind::kInvalidInput, "unknown solver '" + name + "'");
}

// ---------------------------------------------------------------------------
// AdjacencyGraph

AdjacencyGraph::AdjacencyGraph(std::vector<Node> nodes, std::vector<double> costs,
                               std::vector<std::int32_t> arc_paths,
                               std::vector<Polyline> paths,
                               std::shared_ptr<const FreeSpace> free_space)
    : nodes_(std::move(nodes)),
      costs_(std::move(costs)),
      arc_paths_(std::move(arc_paths)),
      paths_(std::move(paths)),
      free_space_(std::move(free_space)) {
  const std::size_t n = nodes_.size();
  if (n < 2 || costs_.size() != n * n) {
    throw CoverageError(ErrorKind::kInvalidInput, "malformed adjacency graph");
  }
  if (arc_paths_.empty()) arc_paths_.assign(n * n, -1);
  int max_cluster = 0;
  for (const Node& node : nodes_) {
    if (node.cluster < 0) throw CoverageError(ErrorKind::kInvalidInput, "negative cluster id");
    max_cluster = std::max(max_cluster, node.cluster);
  }
  clusters_.assign(static_cast<std::size_t>(max_cluster) + 1, {});
  for (std::size_t i = 0; i < n; ++i) {
    clusters_[static_cast<std::size_t>(nodes_[i].cluster)].push_back(i);
  }
  for (const auto& c : clusters_) {
    if (c.empty()) throw CoverageError(ErrorKind::kInvalidInput, "empty cluster");
  }
  if (clusters_.size() < 2 || clusters_.front() != std::vector<std::size_t>{0} ||
      clusters_.back() != std::vector<std::size_t>{n - 1}) {
    throw CoverageError(ErrorKind::kInvalidInput,
                        "start and goal must be singleton first and last clusters");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool forbidden = nodes_[i].cluster == nodes_[j].cluster || j == 0 ||
                             i == n - 1 || (i == 0 && j == n - 1);
      if (forbidden) costs_[i * n + j] = kNoArc;
    }
  }
}

AdjacencyGraph AdjacencyGraph::fromCosts(const std::vector<int>& cluster_of,
                                         const std::vector<std::vector<double>>& costs) {
  const std::size_t n = cluster_of.size();
  std::vector<Node> nodes(n);
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i].cluster = cluster_of[i];
    nodes[i].kind = i == 0 ? NodeKind::kStart : (i + 1 == n ? NodeKind::kGoal : NodeKind::kSweep);
  }
  std::vector<double> flat(n * n, kNoArc);
  for (std::size_t i = 0; i < n && i < costs.size(); ++i) {
    for (std::size_t j = 0; j < n && j < costs[i].size(); ++j) flat[i * n + j] = costs[i][j];
  }
  return AdjacencyGraph(std::move(nodes), std::move(flat), {}, {}, nullptr);
}

std::size_t AdjacencyGraph::arcCount() const {
  return static_cast<std::size_t>(
      std::count_if(costs_.begin(), costs_.end(), [](double c) { return c < kNoArc; }));
}

const Polyline* AdjacencyGraph::transition(std::size_t i, std::size_t j) const {
  const std::int32_t idx = arc_paths_[i * size() + j];
  return idx < 0 ? nullptr : &paths_[static_cast<std::size_t>(idx)];
}

AdjacencyGraph AdjacencyGraph::subgraph(const std::vector<std::size_t>& keep) const {
  const std::size_t n = size();
  const std::size_t m = keep.size();
  std::vector<Node> nodes;
  nodes.reserve(m);
  for (std::size_t k : keep) nodes.push_back(nodes_[k]);
  std::vector<double> costs(m * m);
  std::vector<std::int32_t> arc_paths(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      costs[a * m + b] = costs_[keep[a] * n + keep[b]];
      arc_paths[a * m + b] = arc_paths_[keep[a] * n + keep[b]];
    }
  }
  return AdjacencyGraph(std::move(nodes), std::move(costs), std::move(arc_paths), paths_,
                        free_space_);
}

// ---------------------------------------------------------------------------
// Construction

namespace {

// Distinct query points with their visibility sets, computed once.
class PointIndex {
 public:
  std::size_t add(const Point& p) {
    auto [it, inserted] = index_.try_emplace({p.x, p.y}, points_.size());
    if (inserted) points_.push_back(p);
    return it->second;
  }

  void computeVisibility(const FreeSpace& space, unsigned threads) {
    vis_.assign(points_.size(), {});
    internal::parallelFor(points_.size(), threads, [&](std::size_t i) {
      vis_[i] = visibleNodes(space.graph(), space.polygon(), points_[i]);
    });
  }

  Polyline path(const FreeSpace& space, std::size_t a, std::size_t b) const {
    return shortestPath(space.graph(), space.polygon(), points_[a], vis_[a], points_[b],
                        vis_[b]);
  }

  const Point& point(std::size_t i) const { return points_[i]; }
  std::size_t size() const { return points_.size(); }

 private:
  std::map<std::pair<double, double>, std::size_t> index_;
  std::vector<Point> points_;
  std::vector<std::vector<std::size_t>> vis_;
};

std::string describe(const Point& p) {
  std::ostringstream s;
  s << "(" << p.x << ", " << p.y << ")";
  return s.str();
}

}  // namespace

std::vector<Node> makeNodes(const std::vector<std::vector<SweepPattern>>& patterns_per_cell,
                            const Point& start, const Point& goal,
                            const CostModel& model) {
  std::vector<Node> nodes;
  nodes.push_back({0, NodeKind::kStart, std::nullopt, start, start, 0.0});
  int cluster = 1;
  for (const auto& patterns : patterns_per_cell) {
    for (const SweepPattern& p : patterns) {
      nodes.push_back(
          {cluster, NodeKind::kSweep, p, p.start(), p.goal(), polylineCost(p.path, model)});
    }
    ++cluster;
  }
  nodes.push_back({cluster, NodeKind::kGoal, std::nullopt, goal, goal, 0.0});
  return nodes;
}

namespace {

std::vector<bool> dominatedNodes(const std::vector<Node>& nodes, const FreeSpace& space,
                                 const CostModel& model) {
  std::map<int, std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].kind == NodeKind::kSweep) clusters[nodes[i].cluster].push_back(i);
  }
  PointIndex points;
  std::vector<std::size_t> entry(nodes.size()), exit(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    entry[i] = points.add(nodes[i].entry);
    exit[i] = points.add(nodes[i].exit);
  }
  points.computeVisibility(space, 1);

  auto straight = [&](const Point& a, const Point& b) {
    return polylineCost(Polyline{{a, b}}, model);
  };
  std::vector<bool> removed(nodes.size(), false);
  for (const auto& [cluster, members] : clusters) {
    for (std::size_t i : members) {
      for (std::size_t j : members) {
        if (i == j || removed[j]) continue;
        const Node& ni = nodes[i];
        const Node& nj = nodes[j];
        // Straight-line costs bound the detour from below.
        const double bound = straight(ni.entry, nj.entry) + nj.intrinsic_cost +
                             straight(nj.exit, ni.exit);
        if (model.kind != CostKind::kWaypoints && bound > ni.intrinsic_cost) continue;
        const double detour =
            polylineCost(points.path(space, entry[i], entry[j]), model) +
            nj.intrinsic_cost + polylineCost(points.path(space, exit[j], exit[i]), model);
        if (detour <= ni.intrinsic_cost) {
          removed[i] = true;
          break;
        }
      }
    }
  }
  return removed;
}

}  // namespace

std::vector<Node> pruneNodes(std::vector<Node> nodes, const FreeSpace& space,
                             const CostModel& model) {
  const std::vector<bool> removed = dominatedNodes(nodes, space, model);
  std::vector<Node> kept;
  kept.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!removed[i]) kept.push_back(std::move(nodes[i]));
  }
  return kept;
}

AdjacencyGraph pruneDominated(const AdjacencyGraph& graph, const CostModel& model) {
  if (!graph.freeSpace()) {
    throw CoverageError(ErrorKind::kInvalidInput, "pruning needs a geometric graph");
  }
  const std::vector<bool> removed = dominatedNodes(graph.nodes(), *graph.freeSpace(), model);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (!removed[i]) keep.push_back(i);
  }
  return graph.subgraph(keep);
}

AdjacencyGraph connectNodes(std::vector<Node> nodes, std::shared_ptr<const FreeSpace> space,
                            const CostModel& model, unsigned threads) {
  const std::size_t n = nodes.size();
  if (n < 2 || nodes.front().kind != NodeKind::kStart || nodes.back().kind != NodeKind::kGoal) {
    throw CoverageError(ErrorKind::kInvalidInput, "node list must be framed by terminals");
  }
  PointIndex points;
  std::vector<std::size_t> entry(n), exit(n);
  for (std::size_t i = 0; i < n; ++i) {
    exit[i] = points.add(nodes[i].exit);
    entry[i] = points.add(nodes[i].entry);
  }
  points.computeVisibility(*space, threads);

  auto needs_arc = [&](std::size_t i, std::size_t j) {
    return nodes[i].cluster != nodes[j].cluster && i != n - 1 && j != 0 &&
           !(i == 0 && j == n - 1);
  };

  // One shortest path per distinct (exit point, entry point) pair.
  const std::size_t num_points = points.size();
  std::vector<std::int32_t> pair_id(num_points * num_points, -1);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!needs_arc(i, j)) continue;
      std::int32_t& id = pair_id[exit[i] * num_points + entry[j]];
      if (id < 0) {
        id = static_cast<std::int32_t>(pairs.size());
        pairs.emplace_back(exit[i], entry[j]);
      }
    }
  }

  std::vector<Polyline> paths(pairs.size());
  std::vector<double> path_cost(pairs.size());
  internal::parallelFor(pairs.size(), threads, [&](std::size_t k) {
    const auto [a, b] = pairs[k];
    try {
      paths[k] = points.path(*space, a, b);
    } catch (const CoverageError& e) {
      throw CoverageError(e.kind(), "no path from " + describe(points.point(a)) + " to " +
                                        describe(points.point(b)) + ": " + e.message());
    }
    path_cost[k] = polylineCost(paths[k], model);
  });

  std::vector<double> costs(n * n, AdjacencyGraph::kNoArc);
  std::vector<std::int32_t> arc_paths(n * n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!needs_arc(i, j)) continue;
      const std::int32_t id = pair_id[exit[i] * num_points + entry[j]];
      costs[i * n + j] = path_cost[static_cast<std::size_t>(id)] + nodes[j].intrinsic_cost;
      arc_paths[i * n + j] = id;
    }
  }
  return AdjacencyGraph(std::move(nodes), std::move(costs), std::move(arc_paths),
                        std::move(paths), std::move(space));
}

AdjacencyGraph buildGraph(std::shared_ptr<const FreeSpace> space, std::span<const Cell> cells,
                          double sweep_distance, const Point& start, const Point& goal,
                          const CostModel& model, unsigned threads) {
  std::vector<std::vector<SweepPattern>> patterns(cells.size());
  internal::parallelFor(cells.size(), threads, [&](std::size_t i) {
    patterns[i] = allPatterns(cells[i], space->graph(), space->polygon(), sweep_distance);
  });
  return connectNodes(makeNodes(patterns, start, goal, model), std::move(space), model,
                      threads);
}

// ---------------------------------------------------------------------------
// Solutions

bool isFeasible(const AdjacencyGraph& graph, std::span<const std::size_t> sequence) {
  if (sequence.size() != graph.clusterCount()) return false;
  if (sequence.front() != graph.startNode() || sequence.back() != graph.goalNode()) {
    return false;
  }
  std::vector<bool> seen(graph.clusterCount(), false);
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    if (sequence[k] >= graph.size()) return false;
    const auto c = static_cast<std::size_t>(graph.node(sequence[k]).cluster);
    if (seen[c]) return false;
    seen[c] = true;
    if (k > 0 && !graph.hasArc(sequence[k - 1], sequence[k])) return false;
  }
  return true;
}

double sequenceCost(const AdjacencyGraph& graph, std::span<const std::size_t> sequence) {
  double c = 0.0;
  for (std::size_t k = 1; k < sequence.size(); ++k) c += graph.cost(sequence[k - 1], sequence[k]);
  return c;
}

// ---------------------------------------------------------------------------
// Text dump

namespace {
constexpr double kSentinel = 1e18;
}

void writeGtspMatrix(std::ostream& out, const AdjacencyGraph& graph) {
  const std::size_t n = graph.size();
  out << "POLYCOVER_GTSP 1\n";
  out << "NODES " << n << "\n";
  out << "CLUSTERS " << graph.clusterCount() << "\n";
  for (std::size_t c = 0; c < graph.clusterCount(); ++c) {
    out << "CLUSTER " << c << " " << graph.clusters()[c].size();
    for (std::size_t id : graph.clusters()[c]) out << " " << id;
    out << "\n";
  }
  out << "COSTS\n" << std::setprecision(17);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) out << " ";
      out << (graph.hasArc(i, j) ? graph.cost(i, j) : kSentinel);
    }
    out << "\n";
  }
}

AdjacencyGraph readGtspMatrix(std::istream& in) {
  auto fail = [](const std::string& what) {
    return CoverageError(ErrorKind::kInvalidInput, "malformed GTSP matrix: " + what);
  };
  std::string tag;
  int version = 0;
  std::size_t n = 0, k = 0;
  if (!(in >> tag >> version) || tag != "POLYCOVER_GTSP" || version != 1) throw fail("header");
  if (!(in >> tag >> n) || tag != "NODES") throw fail("node count");
  if (!(in >> tag >> k) || tag != "CLUSTERS") throw fail("cluster count");
  std::vector<int> cluster_of(n, -1);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t id = 0, size = 0;
    if (!(in >> tag >> id >> size) || tag != "CLUSTER" || id != c) throw fail("cluster line");
    for (std::size_t s = 0; s < size; ++s) {
      std::size_t node = 0;
      if (!(in >> node) || node >= n) throw fail("cluster member");
      cluster_of[node] = static_cast<int>(c);
    }
  }
  if (!(in >> tag) || tag != "COSTS") throw fail("cost section");
  std::vector<std::vector<double>> costs(n, std::vector<double>(n));
  for (auto& row : costs) {
    for (double& v : row) {
      if (!(in >> v)) throw fail("cost row");
      if (v >= kSentinel) v = AdjacencyGraph::kNoArc;
    }
  }
  return AdjacencyGraph::fromCosts(cluster_of, costs);
}

}  // namespace polycover
