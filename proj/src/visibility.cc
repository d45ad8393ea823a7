#include "polycover/visibility.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <tuple>

namespace polycover {

VisibilityGraph::VisibilityGraph(const PolygonWithHoles& pwh) {
  // The outer ring is CCW and holes are CW, so in both cases a right turn
  // marks a vertex where the free space is reflex.
  auto add_reflex = [&](const Ring& ring) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (orientation(ring.prev(i), ring[i], ring.next(i)) == Orientation::kClockwise) {
        nodes_.push_back(ring[i]);
      }
    }
  };
  add_reflex(pwh.outer());
  for (const Ring& h : pwh.holes()) add_reflex(h);

  adjacency_.assign(nodes_.size(), {});
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
      if (contains(pwh, Segment{nodes_[i], nodes_[j]})) {
        const double len = distance(nodes_[i], nodes_[j]);
        adjacency_[i].push_back({j, len});
        adjacency_[j].push_back({i, len});
      }
    }
  }
}

std::size_t VisibilityGraph::edgeCount() const {
  std::size_t n = 0;
  for (const auto& adj : adjacency_) n += adj.size();
  return n / 2;
}

std::vector<std::size_t> visibleNodes(const VisibilityGraph& graph,
                                      const PolygonWithHoles& pwh, const Point& p) {
  if (!contains(pwh, p)) {
    throw CoverageError(ErrorKind::kInvalidInput, "query point is outside the free space");
  }
  std::vector<std::size_t> visible;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (contains(pwh, Segment{p, graph.nodes()[i]})) visible.push_back(i);
  }
  return visible;
}

namespace {

constexpr double kLengthTolerance = 1e-9;
constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

class AStarSearch {
 public:
  AStarSearch(const VisibilityGraph& graph, const Point& start,
              const std::vector<std::size_t>& start_vis, const Point& goal,
              const std::vector<std::size_t>& goal_vis, Heuristic heuristic)
      : graph_(graph),
        start_(start),
        goal_(goal),
        start_vis_(start_vis),
        heuristic_(heuristic),
        n_(graph.size()),
        goal_dist_(n_, kInf),
        g_(n_ + 2, kInf),
        parent_(n_ + 2, kNoParent),
        version_(n_ + 2, 0),
        expanded_(n_ + 2, false) {
    for (std::size_t v : goal_vis) goal_dist_[v] = distance(graph.nodes()[v], goal);
  }

  // Returns graph node indices strictly between start and goal.
  std::vector<std::size_t> run(SearchStats* stats) {
    const std::size_t s = n_;
    const std::size_t t = n_ + 1;
    g_[s] = 0.0;
    open_.push({h(s), s, version_[s]});
    while (!open_.empty()) {
      const auto [f, u, ver] = open_.top();
      open_.pop();
      if (ver != version_[u]) continue;
      if (g_[t] < kInf && f > g_[t] + kLengthTolerance) break;
      if (u == t) continue;
      expanded_[u] = true;
      if (u == s) {
        for (std::size_t v : start_vis_) relax(u, v, distance(start_, graph_.nodes()[v]));
      } else {
        for (const auto& nb : graph_.adjacency()[u]) relax(u, nb.node, g_[u] + nb.length);
        if (goal_dist_[u] < kInf) relax(u, t, g_[u] + goal_dist_[u]);
      }
    }
    if (stats != nullptr) {
      stats->expanded = static_cast<std::size_t>(
          std::count(expanded_.begin(), expanded_.end(), true));
    }
    if (g_[t] == kInf) {
      throw CoverageError(ErrorKind::kNoPath, "goal is not reachable from start");
    }
    return pathTo(parent_[t]);
  }

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  struct Entry {
    double f;
    std::size_t node;
    std::size_t version;
    bool operator>(const Entry& o) const {
      return std::tie(f, node) > std::tie(o.f, o.node);
    }
  };

  const Point& pointOf(std::size_t v) const {
    if (v == n_) return start_;
    if (v == n_ + 1) return goal_;
    return graph_.nodes()[v];
  }

  double h(std::size_t v) const {
    return heuristic_ == Heuristic::kEuclidean ? distance(pointOf(v), goal_) : 0.0;
  }

  // Graph node indices from start (exclusive) to v (inclusive).
  std::vector<std::size_t> pathTo(std::size_t v) const {
    std::vector<std::size_t> seq;
    while (v != kNoParent && v != n_) {
      seq.push_back(v);
      v = parent_[v];
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
  }

  bool isAncestor(std::size_t a, std::size_t v) const {
    for (std::size_t p = v; p != kNoParent; p = parent_[p]) {
      if (p == a) return true;
    }
    return false;
  }

  void relax(std::size_t u, std::size_t v, double cand) {
    bool update = false;
    if (cand < g_[v] - kLengthTolerance) {
      update = true;
    } else if (cand <= g_[v] + kLengthTolerance && parent_[v] != u &&
               !isAncestor(v, u)) {
      update = pathTo(u) < pathTo(parent_[v]);
    }
    if (!update) return;
    g_[v] = std::min(g_[v], cand);
    parent_[v] = u;
    ++version_[v];
    open_.push({g_[v] + h(v), v, version_[v]});
  }

  const VisibilityGraph& graph_;
  Point start_;
  Point goal_;
  const std::vector<std::size_t>& start_vis_;
  Heuristic heuristic_;
  std::size_t n_;
  std::vector<double> goal_dist_;
  std::vector<double> g_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> version_;
  std::vector<bool> expanded_;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open_;
};

}  // namespace

Polyline shortestPath(const VisibilityGraph& graph, const PolygonWithHoles& pwh,
                      const Point& start, const std::vector<std::size_t>& start_vis,
                      const Point& goal, const std::vector<std::size_t>& goal_vis,
                      SearchStats* stats, Heuristic heuristic) {
  if (!contains(pwh, start) || !contains(pwh, goal)) {
    throw CoverageError(ErrorKind::kInvalidInput,
                        "path endpoint is outside the free space");
  }
  if (stats != nullptr) stats->expanded = 0;
  if (nearlyEqual(start, goal)) return Polyline{{start}};
  if (contains(pwh, Segment{start, goal})) return Polyline{{start, goal}};

  AStarSearch search(graph, start, start_vis, goal, goal_vis, heuristic);
  Polyline path;
  path.waypoints.push_back(start);
  for (std::size_t v : search.run(stats)) path.waypoints.push_back(graph.nodes()[v]);
  path.waypoints.push_back(goal);
  return path;
}

Polyline shortestPath(const VisibilityGraph& graph, const PolygonWithHoles& pwh,
                      const Point& start, const Point& goal, SearchStats* stats,
                      Heuristic heuristic) {
  if (!contains(pwh, start) || !contains(pwh, goal)) {
    throw CoverageError(ErrorKind::kInvalidInput,
                        "path endpoint is outside the free space");
  }
  if (nearlyEqual(start, goal) || contains(pwh, Segment{start, goal})) {
    return shortestPath(graph, pwh, start, {}, goal, {}, stats, heuristic);
  }
  return shortestPath(graph, pwh, start, visibleNodes(graph, pwh, start), goal,
                      visibleNodes(graph, pwh, goal), stats, heuristic);
}

}  // namespace polycover
