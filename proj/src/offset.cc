#include <string>

#include "polycover/geometry.h"

namespace polycover {
namespace {

// Miter points further than this multiple of the wall distance from the
// original vertex are replaced by a bevel.
constexpr double kMiterLimit = 4.0;

Point leftNormal(const Point& from, const Point& to) {
  const Point d = to - from;
  const double len = norm(d);
  return {-d.y / len, d.x / len};
}

// Translates every edge to its left by `w` (into the free space for a CCW
// outer ring and for CW holes) and joins neighbors with miters. Throws when
// an edge collapses, i.e. its offset copy reverses direction.
std::vector<Point> offsetRing(const Ring& ring, double w, const std::string& what) {
  const std::size_t n = ring.size();
  std::vector<Point> in_pts(n);   // end of the offset incoming edge at vertex i
  std::vector<Point> out_pts(n);  // start of the offset outgoing edge
  std::vector<bool> beveled(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = ring.prev(i);
    const Point& cur = ring[i];
    const Point& next = ring.next(i);
    const Point n_in = leftNormal(prev, cur);
    const Point n_out = leftNormal(cur, next);
    const double turn = cross(cur - prev, next - cur);
    const Point miter = cur + (n_in + n_out) * (w / (1.0 + dot(n_in, n_out)));
    if (turn < 0.0 && distance(miter, cur) > kMiterLimit * w) {
      in_pts[i] = cur + n_in * w;
      out_pts[i] = cur + n_out * w;
      beveled[i] = true;
    } else {
      in_pts[i] = out_pts[i] = miter;
    }
  }

  std::vector<Point> out;
  out.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (dot(in_pts[j] - out_pts[i], ring.next(i) - ring[i]) <= 0.0) {
      throw CoverageError(ErrorKind::kGeometry,
                          what + " loses an edge under wall distance " +
                              std::to_string(w));
    }
    if (beveled[i]) out.push_back(in_pts[i]);
    out.push_back(out_pts[i]);
  }
  return out;
}

Ring offsetRingChecked(const Ring& ring, double w, const std::string& what) {
  std::vector<Point> raw = offsetRing(ring, w, what);
  const double original_area = ring.signedArea();
  const double new_area = signedArea(raw);
  if (new_area == 0.0 || (new_area > 0.0) != (original_area > 0.0)) {
    throw CoverageError(ErrorKind::kGeometry,
                        what + " collapses under wall distance " +
                            std::to_string(w));
  }
  try {
    return Ring(std::move(raw));
  } catch (const CoverageError&) {
    throw CoverageError(ErrorKind::kGeometry,
                        what + " self-intersects or vanishes under wall "
                               "distance " + std::to_string(w));
  }
}

}  // namespace

PolygonWithHoles offsetInward(const PolygonWithHoles& pwh, double wall_distance) {
  if (!(wall_distance >= 0.0) || !std::isfinite(wall_distance)) {
    throw CoverageError(ErrorKind::kInvalidInput,
                        "wall distance must be finite and nonnegative");
  }
  if (wall_distance == 0.0) return pwh;

  Ring outer = offsetRingChecked(pwh.outer(), wall_distance, "outer ring");
  std::vector<Ring> holes;
  holes.reserve(pwh.holes().size());
  for (std::size_t i = 0; i < pwh.holes().size(); ++i) {
    holes.push_back(offsetRingChecked(pwh.holes()[i], wall_distance,
                                      "hole " + std::to_string(i)));
  }
  try {
    return PolygonWithHoles(std::move(outer), std::move(holes));
  } catch (const CoverageError& e) {
    throw CoverageError(ErrorKind::kGeometry,
                        "offset region is split or merged: " + e.message());
  }
}

}  // namespace polycover
