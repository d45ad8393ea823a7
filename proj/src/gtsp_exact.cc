#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <tuple>

#include "polycover/gtsp.h"

namespace polycover {

Solution solveExact(const AdjacencyGraph& graph, const ExactOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = graph.size();
  const std::size_t m = graph.cellClusterCount();
  if (m == 0) throw CoverageError(ErrorKind::kInvalidInput, "graph has no cell clusters");

  const auto intractable = [&](const std::string& why) {
    return CoverageError(ErrorKind::kIntractable, "exact solver intractable: " + why);
  };
  if (m >= 40 || n > (options.max_states >> m)) {
    throw intractable(std::to_string(n) + " nodes x 2^" + std::to_string(m) +
                      " cluster sets exceeds the budget of " +
                      std::to_string(options.max_states) + " states");
  }
  const std::uint64_t masks = std::uint64_t{1} << m;
  const std::uint64_t full = masks - 1;
  const std::size_t num_states = n * masks;

  // Bit of each node's cell cluster (terminals carry none).
  std::vector<std::uint64_t> bit(n, 0);
  std::vector<std::size_t> sweep_nodes;
  for (std::size_t i = 0; i < n; ++i) {
    const int c = graph.node(i).cluster;
    if (i != graph.startNode() && i != graph.goalNode()) {
      bit[i] = std::uint64_t{1} << (c - 1);
      sweep_nodes.push_back(i);
    }
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::vector<double> dist(num_states, kInf);
  std::vector<std::uint64_t> parent(num_states, kNone);
  auto state = [&](std::size_t node, std::uint64_t mask) { return node * masks + mask; };

  using Entry = std::tuple<double, std::uint64_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  const std::uint64_t source = state(graph.startNode(), 0);
  dist[source] = 0.0;
  open.emplace(0.0, source);

  const std::uint64_t target = state(graph.goalNode(), full);
  std::size_t pops = 0;
  while (!open.empty()) {
    const auto [d, s] = open.top();
    open.pop();
    if (d > dist[s]) continue;
    if (s == target) break;
    if ((++pops & 0xfff) == 0 && std::isfinite(options.time_limit_s)) {
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (elapsed > options.time_limit_s) throw intractable("time limit exceeded");
    }
    const std::size_t u = s / masks;
    const std::uint64_t mask = s % masks;
    auto relax = [&](std::size_t v, std::uint64_t next_mask) {
      if (!graph.hasArc(u, v)) return;
      const std::uint64_t t = state(v, next_mask);
      const double nd = d + graph.cost(u, v);
      if (nd < dist[t]) {
        dist[t] = nd;
        parent[t] = s;
        open.emplace(nd, t);
      }
    };
    if (mask == full) {
      relax(graph.goalNode(), full);
    } else {
      for (std::size_t v : sweep_nodes) {
        if ((mask & bit[v]) == 0) relax(v, mask | bit[v]);
      }
    }
  }

  if (dist[target] == kInf) {
    throw CoverageError(ErrorKind::kNoPath, "no feasible tour through all clusters");
  }
  Solution sol;
  sol.solver = SolverKind::kExact;
  sol.cost = dist[target];
  for (std::uint64_t s = target; s != kNone; s = parent[s]) {
    sol.sequence.push_back(static_cast<std::size_t>(s / masks));
  }
  std::reverse(sol.sequence.begin(), sol.sequence.end());
  sol.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return sol;
}

}  // namespace polycover
