#pragma once

#include <cstddef>
#include <vector>

#include "polycover/geometry.h"

namespace polycover {

// Reduced visibility graph: nodes are the vertices where the free space is
// reflex (non-convex outer vertices and convex hole vertices), edges connect
// mutually visible nodes.
class VisibilityGraph {
 public:
  struct Neighbor {
    std::size_t node;
    double length;
  };

  VisibilityGraph() = default;
  explicit VisibilityGraph(const PolygonWithHoles& pwh);

  const std::vector<Point>& nodes() const { return nodes_; }
  const std::vector<std::vector<Neighbor>>& adjacency() const { return adjacency_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t edgeCount() const;

 private:
  std::vector<Point> nodes_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

// Indices of graph nodes visible from p. Throws kInvalidInput when p is not in
// the free space.
std::vector<std::size_t> visibleNodes(const VisibilityGraph& graph,
                                      const PolygonWithHoles& pwh, const Point& p);

struct SearchStats {
  std::size_t expanded = 0;
};

enum class Heuristic { kEuclidean, kNone };

// Euclidean shortest path. Straight segment when visible, otherwise A* over
// the graph plus both endpoints. Equal-length alternatives resolve to the
// lexicographically smallest sequence of graph node indices.
Polyline shortestPath(const VisibilityGraph& graph, const PolygonWithHoles& pwh,
                      const Point& start, const Point& goal,
                      SearchStats* stats = nullptr,
                      Heuristic heuristic = Heuristic::kEuclidean);

// Same query with precomputed visibility sets for both endpoints.
Polyline shortestPath(const VisibilityGraph& graph, const PolygonWithHoles& pwh,
                      const Point& start, const std::vector<std::size_t>& start_vis,
                      const Point& goal, const std::vector<std::size_t>& goal_vis,
                      SearchStats* stats = nullptr,
                      Heuristic heuristic = Heuristic::kEuclidean);

// Free space bundled with its visibility graph; immutable and shareable.
class FreeSpace {
 public:
  explicit FreeSpace(PolygonWithHoles pwh)
      : pwh_(std::move(pwh)), graph_(pwh_) {}

  const PolygonWithHoles& polygon() const { return pwh_; }
  const VisibilityGraph& graph() const { return graph_; }

  Polyline shortestPath(const Point& a, const Point& b) const {
    return polycover::shortestPath(graph_, pwh_, a, b);
  }

 private:
  PolygonWithHoles pwh_;
  VisibilityGraph graph_;
};

}  // namespace polycover
