#include <array>
#include <cmath>
#include <limits>

#include "polycover/geometry.h"

namespace polycover {
namespace {

// Error-free transformations; see Shewchuk, "Adaptive Precision
// Floating-Point Arithmetic and Fast Robust Geometric Predicates".
inline void twoSum(double a, double b, double& sum, double& err) {
  sum = a + b;
  const double b_virtual = sum - a;
  const double a_virtual = sum - b_virtual;
  err = (a - a_virtual) + (b - b_virtual);
}

inline void twoProduct(double a, double b, double& prod, double& err) {
  prod = a * b;
  err = std::fma(a, b, -prod);
}

// Adds `b` to the nonoverlapping expansion e[0..n), increasing magnitude.
// Returns the new length (n + 1, zeros kept).
int growExpansion(double* e, int n, double b) {
  double q = b;
  for (int i = 0; i < n; ++i) {
    double sum, err;
    twoSum(q, e[i], sum, err);
    e[i] = err;
    q = sum;
  }
  e[n] = q;
  return n + 1;
}

int exactOrientationSign(const Point& a, const Point& b, const Point& c) {
  // det = ax*by - ax*cy - cx*by - ay*bx + ay*cx + cy*bx, every product split
  // into an exact (hi, lo) pair.
  const std::array<std::array<double, 2>, 6> products = {{
      {a.x, b.y},
      {-a.x, c.y},
      {-c.x, b.y},
      {-a.y, b.x},
      {a.y, c.x},
      {c.y, b.x},
  }};
  std::array<double, 12> expansion{};
  int length = 0;
  for (const auto& [u, v] : products) {
    double hi, lo;
    twoProduct(u, v, hi, lo);
    length = growExpansion(expansion.data(), length, lo);
    length = growExpansion(expansion.data(), length, hi);
  }
  for (int i = length - 1; i >= 0; --i) {
    if (expansion[i] > 0.0) return 1;
    if (expansion[i] < 0.0) return -1;
  }
  return 0;
}

}  // namespace

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  constexpr double kMachineEps = std::numeric_limits<double>::epsilon() / 2.0;
  constexpr double kErrBound = (3.0 + 16.0 * kMachineEps) * kMachineEps;

  const double det_left = (p.x - r.x) * (q.y - r.y);
  const double det_right = (p.y - r.y) * (q.x - r.x);
  const double det = det_left - det_right;
  const double bound = kErrBound * (std::abs(det_left) + std::abs(det_right));

  int sign = 0;
  if (det > bound) {
    sign = 1;
  } else if (-det > bound) {
    sign = -1;
  } else {
    sign = exactOrientationSign(p, q, r);
  }
  if (sign > 0) return Orientation::kCounterClockwise;
  if (sign < 0) return Orientation::kClockwise;
  return Orientation::kCollinear;
}

namespace {

bool onSegment(const Point& p, const Segment& s) {
  return std::min(s.source.x, s.target.x) <= p.x &&
         p.x <= std::max(s.source.x, s.target.x) &&
         std::min(s.source.y, s.target.y) <= p.y &&
         p.y <= std::max(s.source.y, s.target.y);
}

}  // namespace

bool segmentsIntersect(const Segment& a, const Segment& b) {
  const Orientation o1 = orientation(a.source, a.target, b.source);
  const Orientation o2 = orientation(a.source, a.target, b.target);
  const Orientation o3 = orientation(b.source, b.target, a.source);
  const Orientation o4 = orientation(b.source, b.target, a.target);

  if (o1 != o2 && o3 != o4 && o1 != Orientation::kCollinear &&
      o2 != Orientation::kCollinear && o3 != Orientation::kCollinear &&
      o4 != Orientation::kCollinear) {
    return true;
  }
  if (o1 == Orientation::kCollinear && onSegment(b.source, a)) return true;
  if (o2 == Orientation::kCollinear && onSegment(b.target, a)) return true;
  if (o3 == Orientation::kCollinear && onSegment(a.source, b)) return true;
  if (o4 == Orientation::kCollinear && onSegment(a.target, b)) return true;
  return false;
}

}  // namespace polycover
