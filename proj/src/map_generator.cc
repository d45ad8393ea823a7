#include "polycover/map_generator.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <random>
#include <string>

namespace polycover {

namespace {

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t index, int obstacles) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                      static_cast<std::uint32_t>(obstacles)};
    engine_.seed(seq);
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

double roundMm(double v) { return std::round(v * 1000.0) / 1000.0; }

// Convex polygon on a rotated ellipse; rejects thin or spiky shapes.
std::optional<std::vector<Point>> convexCandidate(Rng& rng, const GeneratorOptions& opt) {
  const int n = rng.integer(opt.min_vertices, opt.max_vertices);
  std::vector<double> gaps(n);
  double total = 0.0;
  for (double& g : gaps) total += (g = rng.uniform(0.5, 1.5));
  const double rx = rng.uniform(0.5 * opt.min_extent, 0.5 * opt.max_extent);
  const double ry = rng.uniform(0.5 * opt.min_extent, 0.5 * opt.max_extent);
  const double phi = rng.uniform(0.0, kPi);
  const Point c{rng.uniform(0.0, opt.world_size), rng.uniform(0.0, opt.world_size)};

  std::vector<Point> pts;
  double t = rng.uniform(0.0, 2.0 * kPi);
  for (double g : gaps) {
    const Point local{rx * std::cos(t), ry * std::sin(t)};
    const Point p = rotate(local, phi) + c;
    pts.push_back({roundMm(p.x), roundMm(p.y)});
    t += g / total * 2.0 * kPi;
  }

  double x_lo = pts[0].x, x_hi = x_lo, y_lo = pts[0].y, y_hi = y_lo;
  for (const Point& p : pts) {
    x_lo = std::min(x_lo, p.x);
    x_hi = std::max(x_hi, p.x);
    y_lo = std::min(y_lo, p.y);
    y_hi = std::max(y_hi, p.y);
  }
  const double w = x_hi - x_lo, h = y_hi - y_lo;
  if (std::min(w, h) < opt.min_extent || std::max(w, h) > opt.max_extent) return std::nullopt;
  if (x_lo < opt.separation || y_lo < opt.separation ||
      x_hi > opt.world_size - opt.separation || y_hi > opt.world_size - opt.separation) {
    return std::nullopt;
  }

  // Convex with every interior angle in [60, 170] degrees and no short edge.
  for (int i = 0; i < n; ++i) {
    const Point& a = pts[(i + n - 1) % n];
    const Point& b = pts[i];
    const Point& d = pts[(i + 1) % n];
    if (distance(a, b) < 0.5) return std::nullopt;
    if (orientation(a, b, d) != Orientation::kCounterClockwise) return std::nullopt;
    const Point u = a - b, v = d - b;
    const double angle = std::acos(std::clamp(dot(u, v) / (norm(u) * norm(v)), -1.0, 1.0));
    if (angle < kPi / 3.0 || angle > kPi * 17.0 / 18.0) return std::nullopt;
  }
  return pts;
}

bool separated(const std::vector<Point>& a, const std::vector<Point>& b, double gap) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Segment ea{a[i], a[(i + 1) % a.size()]};
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (segmentDistance(ea, {b[j], b[(j + 1) % b.size()]}) < gap) return false;
    }
  }
  // Edges far apart; rule out nesting.
  const Ring ra(a), rb(b);
  return !contains(ra, b[0]) && !contains(rb, a[0]);
}

}  // namespace

MapFile generateMap(int obstacles, std::uint64_t seed, std::uint64_t index,
                    const GeneratorOptions& options) {
  if (obstacles < 0) throw CoverageError(ErrorKind::kInvalidInput, "obstacle count must be >= 0");
  Rng rng(seed, index, obstacles);
  std::vector<std::vector<Point>> placed;
  for (int k = 0; k < obstacles; ++k) {
    bool ok = false;
    for (int attempt = 0; attempt < options.max_attempts && !ok; ++attempt) {
      auto candidate = convexCandidate(rng, options);
      if (!candidate) continue;
      ok = std::all_of(placed.begin(), placed.end(), [&](const std::vector<Point>& other) {
        return separated(*candidate, other, options.separation);
      });
      if (ok) placed.push_back(std::move(*candidate));
    }
    if (!ok) {
      throw CoverageError(ErrorKind::kGeometry,
                          "could not place obstacle " + std::to_string(k + 1) + " of " +
                              std::to_string(obstacles) + " after " +
                              std::to_string(options.max_attempts) + " attempts");
    }
  }

  const double s = options.world_size;
  std::vector<Ring> holes;
  for (auto& pts : placed) holes.emplace_back(std::move(pts));
  char name[64];
  std::snprintf(name, sizeof name, "map_%04llu_o%02d", static_cast<unsigned long long>(index),
                obstacles);
  return MapFile{name, PolygonWithHoles(Ring({{0, 0}, {s, 0}, {s, s}, {0, s}}), std::move(holes)),
                 {}};
}

std::vector<MapFile> generateMaps(int count, int min_obstacles, int max_obstacles,
                                  std::uint64_t seed, const GeneratorOptions& options) {
  if (count <= 0) throw CoverageError(ErrorKind::kInvalidInput, "map count must be positive");
  if (min_obstacles < 0 || max_obstacles < min_obstacles) {
    throw CoverageError(ErrorKind::kInvalidInput, "invalid obstacle range");
  }
  std::vector<MapFile> maps;
  const int span = max_obstacles - min_obstacles + 1;
  for (int i = 0; i < count; ++i) {
    maps.push_back(generateMap(min_obstacles + i % span, seed, static_cast<std::uint64_t>(i),
                               options));
  }
  return maps;
}

}  // namespace polycover
