#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "polycover/gtsp.h"

namespace polycover {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool improves(double delta, double base) { return delta < -1e-12 * std::max(1.0, base); }

}  // namespace

std::vector<std::size_t> optimizeClusters(const AdjacencyGraph& graph,
                                          std::span<const std::size_t> order,
                                          double* cost) {
  const std::size_t m = graph.cellClusterCount();
  if (order.size() != m) {
    throw CoverageError(ErrorKind::kInvalidInput, "cluster order must list every cell cluster once");
  }
  std::vector<char> seen(m + 2, 0);
  for (std::size_t c : order) {
    if (c < 1 || c > m || seen[c]) {
      throw CoverageError(ErrorKind::kInvalidInput, "cluster order is not a permutation");
    }
    seen[c] = 1;
  }
  const auto& clusters = graph.clusters();

  // layers[k] = node ids of the k-th visited cluster, framed by the terminals
  std::vector<const std::vector<std::size_t>*> layers;
  layers.push_back(&clusters.front());
  for (std::size_t c : order) layers.push_back(&clusters[c]);
  layers.push_back(&clusters.back());

  std::vector<std::vector<double>> dist(layers.size());
  std::vector<std::vector<std::size_t>> from(layers.size());
  dist[0].assign(layers[0]->size(), 0.0);
  from[0].assign(layers[0]->size(), 0);
  for (std::size_t k = 1; k < layers.size(); ++k) {
    const auto& prev = *layers[k - 1];
    const auto& cur = *layers[k];
    dist[k].assign(cur.size(), kInf);
    from[k].assign(cur.size(), 0);
    for (std::size_t b = 0; b < cur.size(); ++b) {
      for (std::size_t a = 0; a < prev.size(); ++a) {
        const double d = dist[k - 1][a] + graph.cost(prev[a], cur[b]);
        if (d < dist[k][b]) {
          dist[k][b] = d;
          from[k][b] = a;
        }
      }
    }
  }

  const std::size_t last = layers.size() - 1;
  if (cost) *cost = dist[last][0];
  if (!std::isfinite(dist[last][0])) return {};
  std::vector<std::size_t> seq(layers.size());
  std::size_t idx = 0;
  for (std::size_t k = last + 1; k-- > 0;) {
    seq[k] = (*layers[k])[idx];
    idx = from[k][idx];
  }
  return seq;
}

namespace {

struct Individual {
  std::vector<std::size_t> order;  // cell clusters
  std::vector<std::size_t> seq;    // chosen nodes, terminals included
  double cost = kInf;
};

class Memetic {
 public:
  Memetic(const AdjacencyGraph& graph, std::uint64_t seed, const MemeticOptions& options)
      : g_(graph), rng_(seed), opt_(options), m_(graph.cellClusterCount()) {}

  Solution run();

 private:
  std::size_t draw(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  bool outOfTime() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count() >
           opt_.time_limit_s;
  }

  void evaluate(Individual& ind) {
    ind.seq = optimizeClusters(g_, ind.order, &ind.cost);
  }

  void orderFromSeq(Individual& ind) const {
    for (std::size_t k = 0; k < m_; ++k) ind.order[k] = g_.node(ind.seq[k + 1]).cluster;
  }

  bool orOpt(Individual& ind);
  bool twoOpt(Individual& ind);
  void localSearch(Individual& ind);

  std::vector<std::size_t> randomOrder();
  std::vector<std::size_t> crossover(const std::vector<std::size_t>& a,
                                     const std::vector<std::size_t>& b);
  void mutate(std::vector<std::size_t>& order);
  const Individual& tournament(const std::vector<Individual>& pop);

  const AdjacencyGraph& g_;
  std::mt19937_64 rng_;
  MemeticOptions opt_;
  std::size_t m_;
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// Moves a block of 1..3 consecutive cells elsewhere, nodes fixed.
bool Memetic::orOpt(Individual& ind) {
  auto& s = ind.seq;
  const std::size_t n = s.size();  // m + 2
  auto c = [&](std::size_t a, std::size_t b) { return g_.cost(s[a], s[b]); };
  for (std::size_t len = 1; len <= 3 && len < m_; ++len) {
    for (std::size_t i = 1; i + len <= n - 1; ++i) {
      const std::size_t j = i + len - 1;  // block s[i..j]
      const double removed = c(i - 1, i) + c(j, j + 1) - c(i - 1, j + 1);
      // insert between s[p] and s[p+1], outside the block
      for (std::size_t p = 0; p + 1 < n; ++p) {
        if (p + 1 >= i && p <= j) continue;
        const double added = g_.cost(s[p], s[i]) + g_.cost(s[j], s[p + 1]) -
                             g_.cost(s[p], s[p + 1]);
        const double delta = added - removed;
        if (improves(delta, ind.cost)) {
          std::vector<std::size_t> block(s.begin() + i, s.begin() + j + 1);
          s.erase(s.begin() + i, s.begin() + j + 1);
          const std::size_t at = p < i ? p + 1 : p + 1 - len;
          s.insert(s.begin() + at, block.begin(), block.end());
          ind.cost += delta;
          return true;
        }
      }
    }
  }
  return false;
}

// Reverses a run of cells; reversed arc costs come from prefix sums.
bool Memetic::twoOpt(Individual& ind) {
  auto& s = ind.seq;
  const std::size_t n = s.size();
  std::vector<double> fwd(n, 0.0), rev(n, 0.0);
  for (std::size_t t = 0; t + 1 < n; ++t) {
    fwd[t + 1] = fwd[t] + g_.cost(s[t], s[t + 1]);
    rev[t + 1] = rev[t] + g_.cost(s[t + 1], s[t]);
  }
  for (std::size_t i = 1; i + 1 < n - 1; ++i) {
    for (std::size_t j = i + 1; j < n - 1; ++j) {
      const double before = g_.cost(s[i - 1], s[i]) + (fwd[j] - fwd[i]) + g_.cost(s[j], s[j + 1]);
      const double after = g_.cost(s[i - 1], s[j]) + (rev[j] - rev[i]) + g_.cost(s[i], s[j + 1]);
      const double delta = after - before;
      if (improves(delta, ind.cost)) {
        std::reverse(s.begin() + i, s.begin() + j + 1);
        ind.cost += delta;
        return true;
      }
    }
  }
  return false;
}

void Memetic::localSearch(Individual& ind) {
  if (!std::isfinite(ind.cost)) return;
  for (int round = 0; round < 1000; ++round) {
    bool moved = false;
    while (orOpt(ind) || twoOpt(ind)) moved = true;
    const double before = ind.cost;
    orderFromSeq(ind);
    evaluate(ind);
    if (!moved && !improves(ind.cost - before, before)) break;
    if (outOfTime()) break;
  }
}

std::vector<std::size_t> Memetic::randomOrder() {
  std::vector<std::size_t> order(m_);
  std::iota(order.begin(), order.end(), std::size_t{1});
  for (std::size_t i = m_; i > 1; --i) std::swap(order[i - 1], order[draw(i)]);
  return order;
}

// Order crossover: a slice of `a`, the rest in the order of `b`.
std::vector<std::size_t> Memetic::crossover(const std::vector<std::size_t>& a,
                                            const std::vector<std::size_t>& b) {
  std::size_t lo = draw(m_), hi = draw(m_);
  if (lo > hi) std::swap(lo, hi);
  std::vector<std::size_t> child(m_, 0);
  std::vector<char> used(m_ + 1, 0);
  for (std::size_t k = lo; k <= hi; ++k) {
    child[k] = a[k];
    used[a[k]] = 1;
  }
  std::size_t pos = (hi + 1) % m_;
  for (std::size_t t = 0; t < m_; ++t) {
    const std::size_t c = b[(hi + 1 + t) % m_];
    if (used[c]) continue;
    child[pos] = c;
    pos = (pos + 1) % m_;
  }
  return child;
}

void Memetic::mutate(std::vector<std::size_t>& order) {
  if (m_ < 2) return;
  std::size_t i = draw(m_), j = draw(m_);
  if (i > j) std::swap(i, j);
  if (rng_() & 1) {
    std::reverse(order.begin() + i, order.begin() + j + 1);
  } else {
    const std::size_t c = order[i];
    order.erase(order.begin() + i);
    order.insert(order.begin() + draw(m_), c);
  }
}

const Individual& Memetic::tournament(const std::vector<Individual>& pop) {
  const Individual& a = pop[draw(pop.size())];
  const Individual& b = pop[draw(pop.size())];
  return b.cost < a.cost ? b : a;
}

Solution Memetic::run() {
  Solution sol;
  sol.solver = SolverKind::kMemetic;

  const std::size_t pop_size = static_cast<std::size_t>(std::max(2, opt_.population_size));
  std::vector<Individual> pop;
  for (std::size_t k = 0; k < pop_size; ++k) {
    Individual ind;
    ind.order = randomOrder();
    evaluate(ind);
    localSearch(ind);
    pop.push_back(std::move(ind));
    if (m_ <= 1) break;
  }
  auto by_cost = [](const Individual& a, const Individual& b) {
    return a.cost < b.cost || (a.cost == b.cost && a.order < b.order);
  };
  std::sort(pop.begin(), pop.end(), by_cost);
  sol.history.push_back(pop.front().cost);

  int stagnant = 0;
  for (int gen = 0; gen < opt_.max_generations && m_ > 1; ++gen) {
    if (outOfTime()) break;
    const double best = pop.front().cost;
    std::vector<Individual> next = pop;
    for (std::size_t k = 0; k < pop_size; ++k) {
      Individual child;
      child.order = crossover(tournament(pop).order, tournament(pop).order);
      if (uniform() < opt_.mutation_rate) mutate(child.order);
      evaluate(child);
      localSearch(child);
      next.push_back(std::move(child));
    }
    std::sort(next.begin(), next.end(), by_cost);
    next.erase(std::unique(next.begin(), next.end(),
                           [](const Individual& a, const Individual& b) { return a.order == b.order; }),
               next.end());
    // Refill with random orders if duplicates thinned the pool.
    while (next.size() < pop_size) {
      Individual ind;
      ind.order = randomOrder();
      evaluate(ind);
      localSearch(ind);
      next.push_back(std::move(ind));
    }
    std::sort(next.begin(), next.end(), by_cost);
    next.resize(pop_size);
    pop = std::move(next);
    sol.history.push_back(pop.front().cost);
    stagnant = improves(pop.front().cost - best, best) ? 0 : stagnant + 1;
    if (stagnant >= opt_.stagnation_generations) break;
  }

  const Individual& best = pop.front();
  if (!std::isfinite(best.cost)) {
    throw CoverageError(ErrorKind::kNoPath, "no feasible tour through all clusters");
  }
  sol.sequence = best.seq;
  sol.cost = sequenceCost(g_, sol.sequence);
  sol.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  return sol;
}

}  // namespace

Solution solveMemetic(const AdjacencyGraph& graph, std::uint64_t seed,
                      const MemeticOptions& options) {
  if (graph.cellClusterCount() == 0) {
    throw CoverageError(ErrorKind::kInvalidInput, "graph has no cell clusters");
  }
  return Memetic(graph, seed, options).run();
}

}  // namespace polycover
