#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "polycover/error.h"

namespace polycover {

// Snapping tolerance for inexact constructions (meters).
inline constexpr double kEpsilon = 1e-9;
inline constexpr double kPi = 3.14159265358979323846;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  Point operator*(double s) const { return {x * s, y * s}; }
};

inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point& a) { return std::hypot(a.x, a.y); }
inline double distance(const Point& a, const Point& b) { return norm(b - a); }
inline bool nearlyEqual(const Point& a, const Point& b, double tol = kEpsilon) {
  return distance(a, b) <= tol;
}

// Rotation about the origin, counter-clockwise by theta radians.
Point rotate(const Point& p, double theta);

struct Segment {
  Point source;
  Point target;

  double length() const { return distance(source, target); }
};

double pointSegmentDistance(const Point& p, const Segment& s);
double segmentDistance(const Segment& a, const Segment& b);

enum class Orientation { kCounterClockwise, kClockwise, kCollinear };

// Sign of the doubled signed area of (p, q, r). Exact for all finite inputs:
// a floating-point filter with a fallback to error-free expansion arithmetic.
Orientation orientation(const Point& p, const Point& q, const Point& r);

// Closed segment intersection test built on orientation().
bool segmentsIntersect(const Segment& a, const Segment& b);

// Undirected line direction, normalized to [0, pi). Two directions compare
// equal when they agree modulo pi within 1e-9 rad.
class Direction {
 public:
  Direction() = default;
  explicit Direction(double radians);
  static Direction fromVector(const Point& v);

  double radians() const { return theta_; }
  Point unit() const { return {std::cos(theta_), std::sin(theta_)}; }
  Direction perpendicular() const { return Direction(theta_ + kPi / 2.0); }

  friend bool operator==(const Direction& a, const Direction& b);

 private:
  double theta_ = 0.0;
};

// Sorted by angle, equal directions merged.
std::vector<Direction> uniqueDirections(std::vector<Direction> dirs);

double signedArea(std::span<const Point> vertices);

// Closed simple polygon. Construction canonicalizes (drops repeated and
// collinear-consecutive vertices) and rejects degenerate or self-intersecting
// input with ErrorKind::kInvalidInput.
class Ring {
 public:
  explicit Ring(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  const Point& next(std::size_t i) const { return vertices_[(i + 1) % size()]; }
  const Point& prev(std::size_t i) const {
    return vertices_[(i + size() - 1) % size()];
  }
  Segment edge(std::size_t i) const { return {vertices_[i], next(i)}; }

  double signedArea() const;
  double area() const { return std::abs(signedArea()); }
  Orientation orientation() const;
  Ring reversed() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<Point> vertices_;
};

// Drops repeated and (near-)collinear consecutive vertices.
std::vector<Point> canonicalize(std::vector<Point> vertices);
bool isSimple(std::span<const Point> vertices);

// Free space: a CCW outer ring minus CW holes. Hole orientation is normalized
// on construction; containment and disjointness are validated.
class PolygonWithHoles {
 public:
  explicit PolygonWithHoles(Ring outer, std::vector<Ring> holes = {});

  const Ring& outer() const { return outer_; }
  const std::vector<Ring>& holes() const { return holes_; }
  // All boundary edges, outer ring first, then holes in order.
  const std::vector<Segment>& edges() const { return edges_; }
  std::size_t holeVertexCount() const;

  double area() const;

  friend bool operator==(const PolygonWithHoles& a, const PolygonWithHoles& b) {
    return a.outer_ == b.outer_ && a.holes_ == b.holes_;
  }

 private:
  Ring outer_;
  std::vector<Ring> holes_;
  std::vector<Segment> edges_;
};

Ring rotate(const Ring& ring, double theta);
PolygonWithHoles rotate(const PolygonWithHoles& pwh, double theta);

// True iff every line perpendicular to `axis` meets the ring in at most one
// connected set.
bool isMonotone(const Ring& ring, Direction axis);

std::vector<Direction> edgeDirections(const Ring& ring);
std::vector<Direction> edgeDirections(const PolygonWithHoles& pwh);

// Erodes the free space by wall_distance. Throws ErrorKind::kGeometry when the
// result would be empty, split, or touch itself.
PolygonWithHoles offsetInward(const PolygonWithHoles& pwh, double wall_distance);

double distanceToBoundary(const PolygonWithHoles& pwh, const Point& p);

// Closed free space membership; points within kEpsilon of the boundary count
// as inside.
bool contains(const PolygonWithHoles& pwh, const Point& p);
bool contains(const Ring& ring, const Point& p);

// True iff the segment lies in the closed free space (grazing contact allowed)
// and keeps at least `clearance` (minus 1e-9) from every boundary edge.
bool contains(const PolygonWithHoles& pwh, const Segment& s,
              double clearance = 0.0);

struct Polyline {
  std::vector<Point> waypoints;

  double length() const;
  bool empty() const { return waypoints.empty(); }
  const Point& front() const { return waypoints.front(); }
  const Point& back() const { return waypoints.back(); }
  std::size_t segmentCount() const {
    return waypoints.empty() ? 0 : waypoints.size() - 1;
  }
};

}  // namespace polycover
