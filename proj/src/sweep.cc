#include "polycover/sweep.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polycover {

std::string toString(const SweepVariant& v) {
  std::string s = v.side == StartSide::kClockwise ? "cw" : "ccw";
  s += v.order == SweepOrder::kBottomUp ? "_bottom_up" : "_top_down";
  return s;
}

std::vector<Direction> sweepableDirections(const Cell& cell,
                                           std::span<const Direction> extra) {
  std::vector<Direction> candidates = edgeDirections(cell.ring);
  candidates.insert(candidates.end(), extra.begin(), extra.end());
  const Direction own = cell.monotone_axis.perpendicular();
  std::vector<Direction> sweepable{own};
  for (const Direction& d : uniqueDirections(std::move(candidates))) {
    if (!(d == own) && isMonotone(cell.ring, d.perpendicular())) sweepable.push_back(d);
  }
  return uniqueDirections(std::move(sweepable));
}

namespace {

// Extent of the horizontal line at height y inside a y-monotone ring.
bool chordAt(const std::vector<Point>& ring, double y, double& x_lo, double& x_hi) {
  x_lo = std::numeric_limits<double>::infinity();
  x_hi = -x_lo;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % n];
    if (std::abs(p.y - y) <= kEpsilon) {
      x_lo = std::min(x_lo, p.x);
      x_hi = std::max(x_hi, p.x);
    }
    if ((p.y < y - kEpsilon && q.y > y + kEpsilon) ||
        (p.y > y + kEpsilon && q.y < y - kEpsilon)) {
      const double x = p.x + (y - p.y) / (q.y - p.y) * (q.x - p.x);
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
    }
  }
  return x_lo <= x_hi;
}

class PathBuilder {
 public:
  void start(const Point& p) { pattern_.path.waypoints = {p}; }

  void append(const Point& p, SegmentTag tag) {
    if (nearlyEqual(pattern_.path.back(), p)) return;
    pattern_.path.waypoints.push_back(p);
    pattern_.tags.push_back(tag);
  }

  const Point& last() const { return pattern_.path.back(); }
  SweepPattern take() { return std::move(pattern_); }

 private:
  SweepPattern pattern_;
};

}  // namespace

namespace {

// The cell in the frame where `sweep` is the x-axis, with the heights of its
// chords bottom to top.
struct ChordFrame {
  std::vector<Point> local;
  double y_min = 0.0;
  double y_max = 0.0;
  std::vector<double> lines;
};

ChordFrame chordFrame(const Cell& cell, Direction sweep, double sweep_distance) {
  if (!(sweep_distance > 0.0) || !std::isfinite(sweep_distance)) {
    throw CoverageError(ErrorKind::kInvalidInput, "sweep distance must be positive");
  }
  ChordFrame f;
  f.local.reserve(cell.ring.size());
  for (const Point& p : cell.ring.vertices()) f.local.push_back(rotate(p, -sweep.radians()));

  f.y_min = std::numeric_limits<double>::infinity();
  f.y_max = -f.y_min;
  for (const Point& p : f.local) {
    f.y_min = std::min(f.y_min, p.y);
    f.y_max = std::max(f.y_max, p.y);
  }

  if (f.y_max - f.y_min < sweep_distance) {
    f.lines.push_back(0.5 * (f.y_min + f.y_max));
  } else {
    for (int k = 0;; ++k) {
      const double y = f.y_min + k * sweep_distance;
      if (y > f.y_max + kEpsilon) break;
      f.lines.push_back(std::min(y, f.y_max));
    }
    if (f.y_max - f.lines.back() > kEpsilon) f.lines.push_back(f.y_max);
  }
  return f;
}

// x-range of the ring clipped to the horizontal band [lo, hi].
void bandExtent(const std::vector<Point>& ring, double lo, double hi, double& x_lo,
                double& x_hi) {
  x_lo = std::numeric_limits<double>::infinity();
  x_hi = -x_lo;
  const std::size_t n = ring.size();
  auto take = [&](double x) {
    x_lo = std::min(x_lo, x);
    x_hi = std::max(x_hi, x);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % n];
    if (p.y >= lo && p.y <= hi) take(p.x);
    for (double y : {lo, hi}) {
      if ((p.y < y) != (q.y < y) && p.y != q.y) take(p.x + (y - p.y) / (q.y - p.y) * (q.x - p.x));
    }
  }
}

}  // namespace

std::vector<Segment> straightSegments(const Cell& cell, Direction sweep,
                                      double sweep_distance) {
  const ChordFrame f = chordFrame(cell, sweep, sweep_distance);
  const double theta = sweep.radians();
  std::vector<Segment> chords;
  chords.reserve(f.lines.size());
  for (double y : f.lines) {
    double x_lo, x_hi;
    if (!chordAt(f.local, y, x_lo, x_hi)) continue;
    chords.push_back({rotate(Point{x_lo, y}, theta), rotate(Point{x_hi, y}, theta)});
  }
  return chords;
}

double chordOverhang(const Cell& cell, Direction sweep, double sweep_distance) {
  const ChordFrame f = chordFrame(cell, sweep, sweep_distance);
  // Each chord is responsible for the strip up to halfway to its neighbours
  // (or to the cell's extremes for the outermost chords).
  double worst = 0.0;
  const std::size_t n = f.lines.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double y = f.lines[k];
    const double lo = k == 0 ? f.y_min : 0.5 * (f.lines[k - 1] + y);
    const double hi = k + 1 == n ? f.y_max : 0.5 * (y + f.lines[k + 1]);
    double c_lo, c_hi, x_lo, x_hi;
    if (!chordAt(f.local, y, c_lo, c_hi)) return std::numeric_limits<double>::infinity();
    bandExtent(f.local, lo, hi, x_lo, x_hi);
    worst = std::max({worst, c_lo - x_lo, x_hi - c_hi});
  }
  return worst;
}

namespace {

SweepPattern buildPattern(const Cell& cell, Direction sweep, SweepVariant variant,
                          const std::vector<Segment>& chords,
                          const VisibilityGraph& vis, const PolygonWithHoles& pwh) {
  std::vector<std::size_t> order(chords.size());
  for (std::size_t i = 0; i < chords.size(); ++i) {
    order[i] = variant.order == SweepOrder::kBottomUp ? i : chords.size() - 1 - i;
  }
  bool forward = (variant.order == SweepOrder::kBottomUp) ==
                 (variant.side == StartSide::kCounterClockwise);

  PathBuilder builder;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Segment& c = chords[order[k]];
    const Point& from = forward ? c.source : c.target;
    const Point& to = forward ? c.target : c.source;
    if (k == 0) {
      builder.start(from);
    } else {
      const Polyline transition = shortestPath(vis, pwh, builder.last(), from);
      for (std::size_t i = 1; i < transition.waypoints.size(); ++i) {
        builder.append(transition.waypoints[i], SegmentTag::kTransition);
      }
      builder.append(from, SegmentTag::kTransition);
    }
    builder.append(to, SegmentTag::kSweep);
    forward = !forward;
  }
  SweepPattern p = builder.take();
  p.cell_id = cell.id;
  p.sweep_direction = sweep;
  p.variant = variant;
  return p;
}

bool sameWaypoints(const SweepPattern& a, const SweepPattern& b) {
  const auto& wa = a.path.waypoints;
  const auto& wb = b.path.waypoints;
  if (wa.size() != wb.size()) return false;
  for (std::size_t i = 0; i < wa.size(); ++i) {
    if (!nearlyEqual(wa[i], wb[i])) return false;
  }
  return true;
}

constexpr SweepVariant kVariants[] = {
    {StartSide::kCounterClockwise, SweepOrder::kBottomUp},
    {StartSide::kClockwise, SweepOrder::kBottomUp},
    {StartSide::kCounterClockwise, SweepOrder::kTopDown},
    {StartSide::kClockwise, SweepOrder::kTopDown},
};

}  // namespace

SweepPattern pattern(const Cell& cell, Direction sweep, SweepVariant variant,
                     const VisibilityGraph& vis, const PolygonWithHoles& pwh,
                     double sweep_distance) {
  const std::vector<Segment> chords = straightSegments(cell, sweep, sweep_distance);
  if (chords.empty()) {
    throw CoverageError(ErrorKind::kGeometry,
                        "cell " + std::to_string(cell.id) + " has no straight segments");
  }
  return buildPattern(cell, sweep, variant, chords, vis, pwh);
}

std::vector<SweepPattern> permutations(const Cell& cell, Direction sweep,
                                       const VisibilityGraph& vis,
                                       const PolygonWithHoles& pwh,
                                       double sweep_distance) {
  const std::vector<Segment> chords = straightSegments(cell, sweep, sweep_distance);
  if (chords.empty()) {
    throw CoverageError(ErrorKind::kGeometry,
                        "cell " + std::to_string(cell.id) + " has no straight segments");
  }
  std::vector<SweepPattern> patterns;
  for (const SweepVariant& v : kVariants) {
    SweepPattern p = buildPattern(cell, sweep, v, chords, vis, pwh);
    const bool duplicate = std::any_of(patterns.begin(), patterns.end(),
                                       [&](const SweepPattern& q) { return sameWaypoints(p, q); });
    if (!duplicate) patterns.push_back(std::move(p));
  }
  return patterns;
}

std::vector<SweepPattern> allPatterns(const Cell& cell, const VisibilityGraph& vis,
                                      const PolygonWithHoles& pwh,
                                      double sweep_distance) {
  std::vector<SweepPattern> patterns;
  const Direction own = cell.monotone_axis.perpendicular();
  // Chords nearly parallel to a long side leave wide uncovered wedges. Other
  // directions may not do worse than the cell's own one.
  const double allowed =
      std::max(0.5 * sweep_distance, chordOverhang(cell, own, sweep_distance));
  for (const Direction& d : sweepableDirections(cell)) {
    if (!(d == own) && chordOverhang(cell, d, sweep_distance) > allowed + kEpsilon) continue;
    for (SweepPattern& p : permutations(cell, d, vis, pwh, sweep_distance)) {
      patterns.push_back(std::move(p));
    }
  }
  if (patterns.empty()) {
    throw CoverageError(ErrorKind::kGeometry,
                        "cell " + std::to_string(cell.id) + " has no sweepable direction");
  }
  return patterns;
}

SweepPattern reversed(const SweepPattern& p) {
  SweepPattern r = p;
  std::reverse(r.path.waypoints.begin(), r.path.waypoints.end());
  std::reverse(r.tags.begin(), r.tags.end());
  const auto chords = std::count(p.tags.begin(), p.tags.end(), SegmentTag::kSweep);
  r.variant.order = p.variant.order == SweepOrder::kBottomUp ? SweepOrder::kTopDown
                                                              : SweepOrder::kBottomUp;
  // An even chord count ends on the opposite side it started from.
  if (chords % 2 == 0) {
    r.variant.side = p.variant.side == StartSide::kClockwise ? StartSide::kCounterClockwise
                                                              : StartSide::kClockwise;
  }
  return r;
}

}  // namespace polycover
