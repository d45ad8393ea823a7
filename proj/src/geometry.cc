#include "polycover/geometry.h"

#include <algorithm>
#include <limits>
#include <string>

namespace polycover {

Point rotate(const Point& p, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

double pointSegmentDistance(const Point& p, const Segment& s) {
  const Point d = s.target - s.source;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return distance(p, s.source);
  const double t = std::clamp(dot(p - s.source, d) / len2, 0.0, 1.0);
  return distance(p, s.source + d * t);
}

double segmentDistance(const Segment& a, const Segment& b) {
  if (segmentsIntersect(a, b)) return 0.0;
  return std::min({pointSegmentDistance(a.source, b),
                   pointSegmentDistance(a.target, b),
                   pointSegmentDistance(b.source, a),
                   pointSegmentDistance(b.target, a)});
}

// ---------------------------------------------------------------------------
// Direction

namespace {
constexpr double kAngleTolerance = 1e-9;
}

Direction::Direction(double radians) {
  double t = std::fmod(radians, kPi);
  if (t < 0.0) t += kPi;
  if (t >= kPi - kAngleTolerance) t = 0.0;
  theta_ = t;
}

Direction Direction::fromVector(const Point& v) {
  return Direction(std::atan2(v.y, v.x));
}

bool operator==(const Direction& a, const Direction& b) {
  const double diff = std::abs(a.theta_ - b.theta_);
  return diff <= kAngleTolerance || kPi - diff <= kAngleTolerance;
}

std::vector<Direction> uniqueDirections(std::vector<Direction> dirs) {
  std::sort(dirs.begin(), dirs.end(), [](const Direction& a, const Direction& b) {
    return a.radians() < b.radians();
  });
  std::vector<Direction> out;
  for (const Direction& d : dirs) {
    if (out.empty() || !(out.back() == d)) out.push_back(d);
  }
  // Wrap-around: an angle just below pi equals zero.
  if (out.size() > 1 && out.back() == out.front()) out.pop_back();
  return out;
}

// ---------------------------------------------------------------------------
// Rings

double signedArea(std::span<const Point> vertices) {
  double sum = 0.0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % n];
    sum += cross(a, b);
  }
  return 0.5 * sum;
}

std::vector<Point> canonicalize(std::vector<Point> vertices) {
  std::vector<Point> out;
  out.reserve(vertices.size());
  for (const Point& p : vertices) {
    if (out.empty() || !nearlyEqual(out.back(), p)) out.push_back(p);
  }
  while (out.size() > 1 && nearlyEqual(out.front(), out.back())) out.pop_back();

  bool changed = true;
  while (changed && out.size() >= 3) {
    changed = false;
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& prev = out[(i + n - 1) % n];
      const Point& cur = out[i];
      const Point& next = out[(i + 1) % n];
      const double base = distance(prev, next);
      const bool degenerate =
          base <= kEpsilon ||
          std::abs(cross(next - prev, cur - prev)) / base <= kEpsilon;
      if (degenerate) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return out;
}

bool isSimple(std::span<const Point> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Segment a{vertices[i], vertices[(i + 1) % n]};
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the wrap
      const Segment b{vertices[j], vertices[(j + 1) % n]};
      if (segmentsIntersect(a, b)) return false;
    }
  }
  return true;
}

Ring::Ring(std::vector<Point> vertices) {
  for (const Point& p : vertices) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw CoverageError(ErrorKind::kInvalidInput, "non-finite ring vertex");
    }
  }
  vertices_ = canonicalize(std::move(vertices));
  if (vertices_.size() < 3) {
    throw CoverageError(ErrorKind::kInvalidInput,
                        "ring has fewer than three distinct vertices");
  }
  if (polycover::signedArea(vertices_) == 0.0) {
    throw CoverageError(ErrorKind::kInvalidInput, "ring has zero area");
  }
  if (!isSimple(vertices_)) {
    throw CoverageError(ErrorKind::kInvalidInput, "ring is self-intersecting");
  }
}

double Ring::signedArea() const { return polycover::signedArea(vertices_); }

Orientation Ring::orientation() const {
  return signedArea() > 0.0 ? Orientation::kCounterClockwise
                            : Orientation::kClockwise;
}

Ring Ring::reversed() const {
  std::vector<Point> v(vertices_.rbegin(), vertices_.rend());
  return Ring(std::move(v));
}

Ring rotate(const Ring& ring, double theta) {
  std::vector<Point> v;
  v.reserve(ring.size());
  for (const Point& p : ring.vertices()) v.push_back(rotate(p, theta));
  return Ring(std::move(v));
}

bool contains(const Ring& ring, const Point& p) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (pointSegmentDistance(p, ring.edge(i)) <= kEpsilon) return true;
  }
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = ring[i];
    const Point& b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

namespace {

bool strictlyInside(const Ring& ring, const Point& p) {
  bool inside = false;
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = ring[i];
    const Point& b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

bool ringsTouch(const Ring& a, const Ring& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (segmentsIntersect(a.edge(i), b.edge(j))) return true;
    }
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// PolygonWithHoles

PolygonWithHoles::PolygonWithHoles(Ring outer, std::vector<Ring> holes)
    : outer_(outer.orientation() == Orientation::kCounterClockwise
                 ? std::move(outer)
                 : outer.reversed()) {
  holes_.reserve(holes.size());
  for (Ring& h : holes) {
    holes_.push_back(h.orientation() == Orientation::kClockwise ? std::move(h)
                                                                : h.reversed());
  }
  for (std::size_t i = 0; i < holes_.size(); ++i) {
    const Ring& h = holes_[i];
    if (ringsTouch(outer_, h) || !strictlyInside(outer_, h[0])) {
      throw CoverageError(ErrorKind::kInvalidInput,
                          "hole " + std::to_string(i) +
                              " is not strictly inside the outer ring");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const Ring& g = holes_[j];
      if (ringsTouch(g, h) || strictlyInside(g, h[0]) ||
          strictlyInside(h, g[0])) {
        throw CoverageError(ErrorKind::kInvalidInput,
                            "holes " + std::to_string(j) + " and " +
                                std::to_string(i) + " overlap or touch");
      }
    }
  }
  for (std::size_t i = 0; i < outer_.size(); ++i) edges_.push_back(outer_.edge(i));
  for (const Ring& h : holes_) {
    for (std::size_t i = 0; i < h.size(); ++i) edges_.push_back(h.edge(i));
  }
}

std::size_t PolygonWithHoles::holeVertexCount() const {
  std::size_t n = 0;
  for (const Ring& h : holes_) n += h.size();
  return n;
}

double PolygonWithHoles::area() const {
  double a = outer_.area();
  for (const Ring& h : holes_) a -= h.area();
  return a;
}

PolygonWithHoles rotate(const PolygonWithHoles& pwh, double theta) {
  std::vector<Ring> holes;
  holes.reserve(pwh.holes().size());
  for (const Ring& h : pwh.holes()) holes.push_back(rotate(h, theta));
  return PolygonWithHoles(rotate(pwh.outer(), theta), std::move(holes));
}

// ---------------------------------------------------------------------------
// Monotonicity and directions

bool isMonotone(const Ring& ring, Direction axis) {
  const Point u = axis.unit();
  std::vector<double> proj;
  proj.reserve(ring.size());
  for (const Point& p : ring.vertices()) {
    const double value = dot(p, u);
    if (proj.empty() || std::abs(proj.back() - value) > kEpsilon) {
      proj.push_back(value);
    }
  }
  while (proj.size() > 1 && std::abs(proj.front() - proj.back()) <= kEpsilon) {
    proj.pop_back();
  }
  if (proj.size() < 2) {
    throw CoverageError(ErrorKind::kInvalidInput,
                        "degenerate ring in monotonicity test");
  }
  // A simple polygon is monotone iff its projection has one local minimum.
  const std::size_t n = proj.size();
  int minima = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double prev = proj[(i + n - 1) % n];
    const double next = proj[(i + 1) % n];
    if (proj[i] < prev && proj[i] < next) ++minima;
  }
  return minima == 1;
}

std::vector<Direction> edgeDirections(const Ring& ring) {
  std::vector<Direction> dirs;
  dirs.reserve(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    dirs.push_back(Direction::fromVector(ring.next(i) - ring[i]));
  }
  return uniqueDirections(std::move(dirs));
}

std::vector<Direction> edgeDirections(const PolygonWithHoles& pwh) {
  std::vector<Direction> dirs;
  for (const Segment& e : pwh.edges()) {
    dirs.push_back(Direction::fromVector(e.target - e.source));
  }
  return uniqueDirections(std::move(dirs));
}

// ---------------------------------------------------------------------------
// Containment

double distanceToBoundary(const PolygonWithHoles& pwh, const Point& p) {
  double best = std::numeric_limits<double>::infinity();
  for (const Segment& e : pwh.edges()) {
    best = std::min(best, pointSegmentDistance(p, e));
  }
  return best;
}

bool contains(const PolygonWithHoles& pwh, const Point& p) {
  if (distanceToBoundary(pwh, p) <= kEpsilon) return true;
  if (!strictlyInside(pwh.outer(), p)) return false;
  for (const Ring& h : pwh.holes()) {
    if (strictlyInside(h, p)) return false;
  }
  return true;
}

bool contains(const PolygonWithHoles& pwh, const Segment& s, double clearance) {
  if (!contains(pwh, s.source) || !contains(pwh, s.target)) return false;

  const double len = s.length();
  if (len > kEpsilon) {
    const Point dir = (s.target - s.source) * (1.0 / len);
    std::vector<double> params = {0.0, 1.0};
    for (const Segment& e : pwh.edges()) {
      // Boundary vertices touching the segment split it into sub-intervals.
      const Point rel = e.source - s.source;
      const double off = cross(dir, rel);
      const double along = dot(dir, rel);
      if (std::abs(off) <= kEpsilon && along > -kEpsilon && along < len + kEpsilon) {
        params.push_back(std::clamp(along / len, 0.0, 1.0));
      }

      const double d_src = off;
      const double d_tgt = cross(dir, e.target - s.source);
      const bool edge_straddles = (d_src > kEpsilon && d_tgt < -kEpsilon) ||
                                  (d_src < -kEpsilon && d_tgt > kEpsilon);
      if (!edge_straddles) continue;
      const double elen = e.length();
      const Point edir = (e.target - e.source) * (1.0 / elen);
      const double a1 = cross(edir, s.source - e.source);
      const double a2 = cross(edir, s.target - e.source);
      if ((a1 > kEpsilon && a2 < -kEpsilon) || (a1 < -kEpsilon && a2 > kEpsilon)) {
        return false;  // transversal crossing of the boundary
      }
      if ((a1 > 0.0) != (a2 > 0.0)) {
        params.push_back(std::clamp(a1 / (a1 - a2), 0.0, 1.0));
      }
    }
    std::sort(params.begin(), params.end());
    for (std::size_t i = 0; i + 1 < params.size(); ++i) {
      if ((params[i + 1] - params[i]) * len <= 2.0 * kEpsilon) continue;
      const double mid = 0.5 * (params[i] + params[i + 1]);
      if (!contains(pwh, s.source + (s.target - s.source) * mid)) return false;
    }
  }

  if (clearance > 0.0) {
    for (const Segment& e : pwh.edges()) {
      if (segmentDistance(s, e) < clearance - kEpsilon) return false;
    }
  }
  return true;
}

double Polyline::length() const {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
    sum += distance(waypoints[i], waypoints[i + 1]);
  }
  return sum;
}

}  // namespace polycover
