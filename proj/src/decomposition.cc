#include "polycover/decomposition.h"

#include <algorithm>
#include <iostream>
#include <limits>
#include <numeric>

namespace polycover {

std::string toString(DecompositionKind kind) {
  return kind == DecompositionKind::kBcd ? "bcd" : "tcd";
}

DecompositionKind decompositionKindFromString(const std::string& name) {
  if (name == "bcd") return DecompositionKind::kBcd;
  if (name == "tcd") return DecompositionKind::kTcd;
  throw CoverageError(ErrorKind::kInvalidInput,
                      "unknown decomposition '" + name + "'");
}

namespace {

constexpr double kMinCellArea = 1e-4;
constexpr double kMinCellAltitude = 1e-3;

// Non-vertical boundary edge in the scan frame, a.x < b.x.
struct ScanEdge {
  Point a;
  Point b;

  double yAt(double x) const {
    if (x == a.x) return a.y;
    if (x == b.x) return b.y;
    return a.y + (x - a.x) / (b.x - a.x) * (b.y - a.y);
  }
};

// The free interval between two boundary edges across one slab.
struct Trapezoid {
  std::size_t slab = 0;
  int lower = 0;
  int upper = 0;
  double x0 = 0.0, x1 = 0.0;
  double lo0 = 0.0, lo1 = 0.0;
  double up0 = 0.0, up1 = 0.0;

  double area() const { return 0.5 * (x1 - x0) * ((up0 - lo0) + (up1 - lo1)); }
};

// Shared right/left side length of two trapezoids in neighboring slabs.
double overlap(const Trapezoid& left, const Trapezoid& right) {
  return std::min(left.up1, right.up0) - std::max(left.lo1, right.lo0);
}

struct Chain {
  std::vector<std::size_t> traps;  // one per slab, consecutive slabs
  bool alive = true;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

class ScanDecomposer {
 public:
  ScanDecomposer(const PolygonWithHoles& pwh, Direction scan)
      : theta_(scan.radians()), scan_(scan) {
    // Scan axis becomes +x; the sweep line is vertical.
    const PolygonWithHoles rotated = rotate(pwh, -theta_);
    collectEdges(rotated);
    buildTrapezoids();
    buildConnections();
  }

  std::vector<Cell> run(DecompositionKind kind) {
    UnionFind uf(traps_.size());
    for (std::size_t l = 0; l < traps_.size(); ++l) {
      for (std::size_t r : right_of_[l]) {
        const Trapezoid& a = traps_[l];
        const Trapezoid& b = traps_[r];
        const bool merge =
            kind == DecompositionKind::kTcd
                ? (a.lower == b.lower && a.upper == b.upper)
                : (right_of_[l].size() == 1 && left_of_[r].size() == 1);
        if (merge) uf.unite(l, r);
      }
    }

    std::vector<Chain> chains;
    std::vector<std::size_t> chain_of_root(traps_.size(), kNone);
    for (std::size_t i = 0; i < traps_.size(); ++i) {
      const std::size_t root = uf.find(i);
      if (chain_of_root[root] == kNone) {
        chain_of_root[root] = chains.size();
        chains.emplace_back();
      }
      chains[chain_of_root[root]].traps.push_back(i);
    }
    mergeSlivers(chains);
    return toCells(chains);
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  void collectEdges(const PolygonWithHoles& rotated) {
    std::vector<double> xs;
    auto rings = std::vector<const Ring*>{&rotated.outer()};
    for (const Ring& h : rotated.holes()) rings.push_back(&h);
    for (const Ring* r : rings) {
      for (const Point& p : r->vertices()) xs.push_back(p.x);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    // Event coordinates closer than kEpsilon are processed as one batch.
    std::vector<double> snapped(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      snapped[i] = (i > 0 && xs[i] - xs[i - 1] <= kEpsilon) ? snapped[i - 1] : xs[i];
    }
    auto snap = [&](double x) {
      const auto it = std::lower_bound(xs.begin(), xs.end(), x);
      return snapped[static_cast<std::size_t>(it - xs.begin())];
    };
    events_ = snapped;
    events_.erase(std::unique(events_.begin(), events_.end()), events_.end());

    for (const Ring* r : rings) {
      for (std::size_t i = 0; i < r->size(); ++i) {
        Point p{snap((*r)[i].x), (*r)[i].y};
        Point q{snap(r->next(i).x), r->next(i).y};
        if (p.x == q.x) continue;
        if (p.x > q.x) std::swap(p, q);
        edges_.push_back({p, q});
      }
    }
  }

  void buildTrapezoids() {
    slab_traps_.assign(events_.empty() ? 0 : events_.size() - 1, {});
    std::vector<std::pair<double, int>> crossing;
    for (std::size_t k = 0; k + 1 < events_.size(); ++k) {
      const double x0 = events_[k];
      const double x1 = events_[k + 1];
      const double xm = 0.5 * (x0 + x1);
      crossing.clear();
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (edges_[e].a.x <= x0 && edges_[e].b.x >= x1) {
          crossing.emplace_back(edges_[e].yAt(xm), static_cast<int>(e));
        }
      }
      std::sort(crossing.begin(), crossing.end());
      if (crossing.size() % 2 != 0) {
        throw CoverageError(ErrorKind::kGeometry,
                            "scan line crosses the boundary an odd number of times");
      }
      for (std::size_t i = 0; i + 1 < crossing.size(); i += 2) {
        const ScanEdge& lo = edges_[static_cast<std::size_t>(crossing[i].second)];
        const ScanEdge& up = edges_[static_cast<std::size_t>(crossing[i + 1].second)];
        Trapezoid t;
        t.slab = k;
        t.lower = crossing[i].second;
        t.upper = crossing[i + 1].second;
        t.x0 = x0;
        t.x1 = x1;
        t.lo0 = lo.yAt(x0);
        t.lo1 = lo.yAt(x1);
        t.up0 = up.yAt(x0);
        t.up1 = up.yAt(x1);
        slab_traps_[k].push_back(traps_.size());
        traps_.push_back(t);
      }
    }
  }

  void buildConnections() {
    left_of_.assign(traps_.size(), {});
    right_of_.assign(traps_.size(), {});
    for (std::size_t k = 0; k + 1 < slab_traps_.size(); ++k) {
      for (std::size_t l : slab_traps_[k]) {
        for (std::size_t r : slab_traps_[k + 1]) {
          if (overlap(traps_[l], traps_[r]) > kEpsilon) {
            right_of_[l].push_back(r);
            left_of_[r].push_back(l);
          }
        }
      }
    }
  }

  double chainAltitude(const Chain& c) const {
    return traps_[c.traps.back()].x1 - traps_[c.traps.front()].x0;
  }

  double chainArea(const Chain& c) const {
    double a = 0.0;
    for (std::size_t t : c.traps) a += traps_[t].area();
    return a;
  }

  bool isSliver(const Chain& c) const {
    return chainArea(c) < kMinCellArea || chainAltitude(c) < kMinCellAltitude;
  }

  // Joins degenerate cells to the neighbor sharing the longest boundary, as
  // long as the union stays a chain of consecutive slabs.
  void mergeSlivers(std::vector<Chain>& chains) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < chains.size(); ++s) {
        Chain& sliver = chains[s];
        if (!sliver.alive || !isSliver(sliver)) continue;
        const Trapezoid& first = traps_[sliver.traps.front()];
        const Trapezoid& last = traps_[sliver.traps.back()];

        std::size_t best = kNone;
        bool best_before = false;
        double best_len = kEpsilon;
        for (std::size_t n = 0; n < chains.size(); ++n) {
          const Chain& other = chains[n];
          if (n == s || !other.alive) continue;
          const Trapezoid& o_last = traps_[other.traps.back()];
          const Trapezoid& o_first = traps_[other.traps.front()];
          if (o_last.slab + 1 == first.slab) {
            const double len = overlap(o_last, first);
            if (len > best_len) {
              best = n;
              best_before = true;
              best_len = len;
            }
          }
          if (last.slab + 1 == o_first.slab) {
            const double len = overlap(last, o_first);
            if (len > best_len) {
              best = n;
              best_before = false;
              best_len = len;
            }
          }
        }

        if (best == kNone) {
          std::clog << "polycover: dropping degenerate cell (area "
                    << chainArea(sliver) << " m^2)\n";
          sliver.alive = false;
        } else {
          Chain& target = chains[best];
          if (best_before) {
            target.traps.insert(target.traps.end(), sliver.traps.begin(),
                                sliver.traps.end());
          } else {
            target.traps.insert(target.traps.begin(), sliver.traps.begin(),
                                sliver.traps.end());
          }
          sliver.alive = false;
        }
        changed = true;
      }
    }
  }

  std::vector<Cell> toCells(const std::vector<Chain>& chains) const {
    std::vector<Cell> cells;
    for (const Chain& c : chains) {
      if (!c.alive) continue;
      std::vector<Point> pts;
      pts.reserve(4 * c.traps.size());
      for (std::size_t t : c.traps) {
        pts.push_back({traps_[t].x0, traps_[t].lo0});
        pts.push_back({traps_[t].x1, traps_[t].lo1});
      }
      for (auto it = c.traps.rbegin(); it != c.traps.rend(); ++it) {
        pts.push_back({traps_[*it].x1, traps_[*it].up1});
        pts.push_back({traps_[*it].x0, traps_[*it].up0});
      }
      for (Point& p : pts) p = rotate(p, theta_);
      try {
        cells.push_back({static_cast<int>(cells.size()), Ring(std::move(pts)), scan_});
      } catch (const CoverageError&) {
        std::clog << "polycover: dropping degenerate cell ring\n";
      }
    }
    if (cells.empty()) {
      throw CoverageError(ErrorKind::kGeometry, "decomposition produced no cells");
    }
    return cells;
  }

  double theta_;
  Direction scan_;
  std::vector<double> events_;
  std::vector<ScanEdge> edges_;
  std::vector<Trapezoid> traps_;
  std::vector<std::vector<std::size_t>> slab_traps_;
  std::vector<std::vector<std::size_t>> left_of_;
  std::vector<std::vector<std::size_t>> right_of_;
};

}  // namespace

std::vector<Cell> decomposeBcd(const PolygonWithHoles& pwh, Direction scan) {
  return ScanDecomposer(pwh, scan).run(DecompositionKind::kBcd);
}

std::vector<Cell> decomposeTcd(const PolygonWithHoles& pwh, Direction scan) {
  return ScanDecomposer(pwh, scan).run(DecompositionKind::kTcd);
}

std::vector<Cell> decompose(const PolygonWithHoles& pwh, Direction scan,
                            DecompositionKind kind) {
  return ScanDecomposer(pwh, scan).run(kind);
}

double altitudeSum(std::span<const Cell> cells) {
  double w = 0.0;
  for (const Cell& c : cells) {
    const Point u = c.monotone_axis.unit();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const Point& p : c.ring.vertices()) {
      lo = std::min(lo, dot(p, u));
      hi = std::max(hi, dot(p, u));
    }
    w += hi - lo;
  }
  return w;
}

Decomposition bestDecomposition(const PolygonWithHoles& pwh,
                                DecompositionKind kind) {
  Decomposition best;
  bool found = false;
  std::string last_error = "no candidate directions";
  for (const Direction& dir : edgeDirections(pwh)) {
    std::vector<Cell> cells;
    try {
      cells = decompose(pwh, dir, kind);
    } catch (const CoverageError& e) {
      last_error = e.message();
      continue;
    }
    const double w = altitudeSum(cells);
    bool better = !found;
    if (found) {
      const double tol = 1e-9 * std::max(1.0, best.altitude_sum);
      if (w < best.altitude_sum - tol) {
        better = true;
      } else if (std::abs(w - best.altitude_sum) <= tol &&
                 cells.size() < best.cells.size()) {
        better = true;
      }
    }
    if (better) {
      best = {std::move(cells), dir, kind, w};
      found = true;
    }
  }
  if (!found) {
    throw CoverageError(ErrorKind::kGeometry,
                        "no direction yields a valid decomposition: " + last_error);
  }
  return best;
}

}  // namespace polycover
