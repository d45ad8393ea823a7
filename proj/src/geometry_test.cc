#include "polycover/geometry.h"

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"

namespace polycover {
namespace {

Ring square(double lo, double hi) { return Ring({{lo, lo}, {hi, lo}, {hi, hi}, {lo, hi}}); }

PolygonWithHoles squareWithHole() {
  return PolygonWithHoles(square(0, 10), {square(4, 6)});
}

const std::vector<Point> kUShape{{0, 0}, {3, 0}, {3, 2}, {2, 2}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};

bool sameVertices(const Ring& r, const std::vector<Point>& expected, double tol) {
  if (r.size() != expected.size()) return false;
  // Rings may start anywhere.
  for (std::size_t shift = 0; shift < r.size(); ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < r.size() && ok; ++i) {
      ok = nearlyEqual(r[(i + shift) % r.size()], expected[i], tol);
    }
    if (ok) return true;
  }
  return false;
}

TEST(Orientation, Examples) {
  EXPECT_EQ(orientation({0, 0}, {1, 0}, {0, 1}), Orientation::kCounterClockwise);
  EXPECT_EQ(orientation({0, 0}, {1, 1}, {2, 2}), Orientation::kCollinear);
  EXPECT_EQ(orientation({0, 0}, {0, 1}, {1, 0}), Orientation::kClockwise);
}

TEST(Orientation, NearlyCollinearIsDecidedExactly) {
  // 0.1 is not representable; the naive determinant gets these wrong.
  const Point p{0.1, 0.1}, q{0.3, 0.3};
  const Point r{0.2, std::nextafter(0.2, 1.0)};
  EXPECT_EQ(orientation(p, q, r), Orientation::kCounterClockwise);
  EXPECT_EQ(orientation(p, r, q), Orientation::kClockwise);
  EXPECT_EQ(orientation({1e-300, 0}, {2e-300, 0}, {3e-300, 0}), Orientation::kCollinear);
}

TEST(Orientation, AntisymmetricOnRandomTriples) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20000; ++i) {
    // Mostly tiny perturbations of a common line to stress the fallback.
    const Point p{oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1)};
    const Point d{oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1)};
    const double t = oracle::uniform(rng, -2, 2);
    const Point q = p + d;
    Point r = p + d * t;
    if (i % 2) r.x = std::nextafter(r.x, 10.0);
    const Orientation a = orientation(p, q, r);
    const Orientation b = orientation(q, p, r);
    const Orientation c = orientation(q, r, p);
    EXPECT_EQ(a, c);  // cyclic shift keeps the sign
    if (a == Orientation::kCollinear) {
      EXPECT_EQ(b, Orientation::kCollinear);
    } else {
      EXPECT_NE(b, Orientation::kCollinear);
      EXPECT_NE(a, b);
    }
  }
}

TEST(Ring, CanonicalizationDropsRepeatsAndCollinearVertices) {
  const Ring r({{0, 0}, {1, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}});
  EXPECT_EQ(r.size(), 4u);
  EXPECT_DOUBLE_EQ(r.area(), 4.0);
}

TEST(Ring, RejectsInvalidInput) {
  auto kind = [](std::vector<Point> pts) {
    try {
      Ring r(std::move(pts));
    } catch (const CoverageError& e) {
      return e.kind();
    }
    return ErrorKind::kNoPath;  // no error
  };
  EXPECT_EQ(kind({{0, 0}, {1, 0}}), ErrorKind::kInvalidInput);
  EXPECT_EQ(kind({{0, 0}, {1, 0}, {2, 0}}), ErrorKind::kInvalidInput);
  EXPECT_EQ(kind({{0, 0}, {2, 2}, {2, 0}, {0, 2}}), ErrorKind::kInvalidInput);  // bow tie
  EXPECT_EQ(kind({{0, 0}, {NAN, 0}, {0, 1}}), ErrorKind::kInvalidInput);
}

TEST(PolygonWithHoles, NormalizesOrientationAndValidates) {
  const PolygonWithHoles p(square(0, 10).reversed(), {square(4, 6)});
  EXPECT_EQ(p.outer().orientation(), Orientation::kCounterClockwise);
  EXPECT_EQ(p.holes()[0].orientation(), Orientation::kClockwise);
  EXPECT_DOUBLE_EQ(p.area(), 96.0);
  EXPECT_EQ(p.holeVertexCount(), 4u);

  EXPECT_THROW(PolygonWithHoles(square(0, 10), {square(8, 12)}), CoverageError);
  EXPECT_THROW(PolygonWithHoles(square(0, 10), {square(2, 5), square(4, 7)}), CoverageError);
  EXPECT_THROW(PolygonWithHoles(square(0, 10), {square(0, 5)}), CoverageError);
}

TEST(IsMonotone, Examples) {
  EXPECT_TRUE(isMonotone(square(0, 1), Direction(kPi / 2)));
  EXPECT_FALSE(isMonotone(Ring(kUShape), Direction(kPi / 2)));
  EXPECT_TRUE(isMonotone(Ring(kUShape), Direction(0.0)));
}

TEST(IsMonotone, UShapeOracleAgrees) {
  EXPECT_EQ(oracle::maxPerpendicularCrossings(kUShape, kPi / 2), 4);
  EXPECT_LE(oracle::maxPerpendicularCrossings(kUShape, 0.0), 2);
}

TEST(IsMonotone, AgreesWithCrossingCountOracle) {
  std::mt19937_64 rng(11);
  int monotone = 0;
  for (int i = 0; i < 200; ++i) {
    std::vector<Point> pts =
        oracle::randomStarPolygon(rng, 5 + static_cast<int>(rng() % 8), {0, 0}, 1.0, 5.0);
    const Ring ring(pts);
    for (int k = 0; k < 4; ++k) {
      const double axis = oracle::uniform(rng, 0.0, kPi);
      const bool expected = oracle::maxPerpendicularCrossings(ring.vertices(), axis) <= 2;
      EXPECT_EQ(isMonotone(ring, Direction(axis)), expected) << "polygon " << i;
      monotone += expected;
    }
  }
  // Both outcomes must be exercised.
  EXPECT_GT(monotone, 50);
  EXPECT_LT(monotone, 750);
}

TEST(Rotate, Examples) {
  const PolygonWithHoles sq(square(0, 10));
  EXPECT_EQ(rotate(sq, 0.0), sq);
  const PolygonWithHoles quarter = rotate(sq, kPi / 2);
  EXPECT_TRUE(sameVertices(quarter.outer(), {{0, 0}, {0, 10}, {-10, 10}, {-10, 0}}, 1e-12));
  const Ring tri = rotate(Ring({{0, 0}, {1, 0}, {0, 1}}), kPi);
  EXPECT_TRUE(sameVertices(tri, {{0, 0}, {-1, 0}, {0, -1}}, 1e-12));
}

TEST(Rotate, RoundTripAndAreaConservation) {
  std::mt19937_64 rng(5);
  const PolygonWithHoles p = squareWithHole();
  for (int i = 0; i < 100; ++i) {
    const double theta = oracle::uniform(rng, -7.0, 7.0);
    const PolygonWithHoles r = rotate(p, theta);
    EXPECT_NEAR(r.area(), p.area(), 1e-6 * p.area());
    const PolygonWithHoles back = rotate(r, -theta);
    EXPECT_TRUE(sameVertices(back.outer(), p.outer().vertices(), 1e-9));
    EXPECT_TRUE(sameVertices(back.holes()[0], p.holes()[0].vertices(), 1e-9));
  }
}

TEST(OffsetInward, Examples) {
  const PolygonWithHoles sq(square(0, 10));
  EXPECT_TRUE(sameVertices(offsetInward(sq, 1.0).outer(), square(1, 9).vertices(), 1e-9));
  try {
    offsetInward(sq, 5.0);
    ADD_FAILURE() << "expected an error";
  } catch (const CoverageError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kGeometry);
  }
  const PolygonWithHoles o = offsetInward(squareWithHole(), 0.5);
  EXPECT_TRUE(sameVertices(o.outer(), square(0.5, 9.5).vertices(), 1e-9));
  ASSERT_EQ(o.holes().size(), 1u);
  EXPECT_TRUE(sameVertices(o.holes()[0], square(3.5, 6.5).reversed().vertices(), 1e-9));
}

TEST(OffsetInward, MatchesRasterizedErosion) {
  // Erosion by a disk rounds the grown hole's corners; a miter join keeps
  // them square. Away from those corners the two must agree pixel by pixel.
  const PolygonWithHoles pwh = squareWithHole();
  const double w = 0.5, step = 0.01;
  const PolygonWithHoles o = offsetInward(pwh, w);
  double mismatch_area = 0.0;
  for (const Point& p : oracle::grid(pwh, step)) {
    const bool eroded = oracle::inFreeSpace(pwh, p, 0.0) && oracle::boundaryDistance(pwh, p) >= w;
    const bool offset = oracle::inFreeSpace(o, p, 0.0);
    if (eroded == offset) continue;
    // A pixel of the miter result missing from the erosion would be a bug.
    EXPECT_FALSE(offset && !eroded && oracle::boundaryDistance(pwh, p) < w - step) << p.x << "," << p.y;
    mismatch_area += step * step;
  }
  const double corner_allowance = 4.0 * (1.0 - kPi / 4.0) * w * w;
  EXPECT_NEAR(mismatch_area, corner_allowance, 0.02);
}

TEST(OffsetInward, ZeroIsIdentityAndAreaShrinks) {
  const PolygonWithHoles p = squareWithHole();
  EXPECT_EQ(offsetInward(p, 0.0), p);
  EXPECT_LT(offsetInward(p, 0.1).area(), p.area());
  EXPECT_THROW(offsetInward(p, -1.0), CoverageError);
}

TEST(OffsetInward, MergingHolesIsAnError) {
  const PolygonWithHoles p(square(0, 10), {Ring({{2, 2}, {4, 2}, {4, 4}, {2, 4}}),
                                           Ring({{5, 2}, {7, 2}, {7, 4}, {5, 4}})});
  EXPECT_NO_THROW(offsetInward(p, 0.4));
  EXPECT_THROW(offsetInward(p, 0.6), CoverageError);
  // Hole grows into the wall.
  EXPECT_THROW(offsetInward(PolygonWithHoles(square(0, 10), {square(1, 3)}), 0.6),
               CoverageError);
}

TEST(OffsetInward, ReflexCornerUsesMiterAndSharpCornerBevels) {
  // L-shape: the reflex corner moves diagonally by w*sqrt(2).
  const PolygonWithHoles l(Ring({{0, 0}, {2, 0}, {2, 2}, {1, 2}, {1, 1}, {0, 1}}));
  const PolygonWithHoles o = offsetInward(l, 0.1);
  EXPECT_TRUE(sameVertices(o.outer(),
                           {{0.1, 0.1}, {1.9, 0.1}, {1.9, 1.9}, {1.1, 1.9}, {1.1, 0.9}, {0.1, 0.9}},
                           1e-9));
}

TEST(EdgeDirections, Examples) {
  auto radians = [](const std::vector<Direction>& dirs) {
    std::vector<double> out;
    for (const Direction& d : dirs) out.push_back(d.radians());
    return out;
  };
  EXPECT_EQ(radians(edgeDirections(PolygonWithHoles(Ring({{0, 0}, {4, 0}, {4, 2}, {0, 2}})))),
            (std::vector<double>{0.0, kPi / 2}));
  const auto tri = radians(edgeDirections(Ring({{0, 0}, {1, 0}, {0, 1}})));
  ASSERT_EQ(tri.size(), 3u);
  EXPECT_NEAR(tri[0], 0.0, 1e-12);
  EXPECT_NEAR(tri[1], kPi / 2, 1e-12);
  EXPECT_NEAR(tri[2], 3 * kPi / 4, 1e-12);

  const PolygonWithHoles diamond(Ring({{0, 0}, {20, 0}, {20, 10}, {0, 10}}),
                                 {Ring({{10, 3}, {12, 5}, {10, 7}, {8, 5}})});
  const auto d = radians(edgeDirections(diamond));
  ASSERT_EQ(d.size(), 4u);
  EXPECT_NEAR(d[0], 0.0, 1e-12);
  EXPECT_NEAR(d[1], kPi / 4, 1e-12);
  EXPECT_NEAR(d[2], kPi / 2, 1e-12);
  EXPECT_NEAR(d[3], 3 * kPi / 4, 1e-12);
}

TEST(Direction, EqualModuloPi) {
  EXPECT_EQ(Direction(0.3), Direction(0.3 + kPi));
  EXPECT_EQ(Direction(-kPi / 2), Direction(kPi / 2));
  EXPECT_EQ(Direction(kPi - 1e-12), Direction(0.0));
  EXPECT_FALSE(Direction(0.3) == Direction(0.3 + 1e-6));
}

TEST(ContainsSegment, Examples) {
  const PolygonWithHoles sq(square(0, 10));
  EXPECT_TRUE(contains(sq, Segment{{1, 1}, {9, 9}}));
  EXPECT_FALSE(contains(squareWithHole(), Segment{{1, 5}, {9, 5}}));
  EXPECT_FALSE(contains(sq, Segment{{0.5, 5}, {9, 5}}, 1.0));
  EXPECT_NEAR(oracle::boundaryDistance(sq, {0.5, 5}), 0.5, 1e-12);
}

TEST(ContainsSegment, GrazingAndSlidingCountAsFree) {
  const PolygonWithHoles p = squareWithHole();
  EXPECT_TRUE(contains(p, Segment{{1, 6}, {9, 6}}));   // slides along the hole's top
  EXPECT_TRUE(contains(p, Segment{{2, 4}, {6, 8}}));      // touches the corner (4,6)
  EXPECT_FALSE(contains(p, Segment{{2, 3.5}, {6, 7.5}}));  // cuts the corner
  EXPECT_TRUE(contains(p, Segment{{0, 0}, {10, 0}}));  // along the outer wall
}

TEST(ContainsSegment, AgreesWithSplittingOracle) {
  std::mt19937_64 rng(9);
  const PolygonWithHoles p(Ring({{0, 0}, {10, 0}, {10, 10}, {0, 10}}),
                           {Ring(oracle::randomStarPolygon(rng, 7, {3, 3}, 0.5, 2)),
                            Ring(oracle::randomStarPolygon(rng, 9, {7, 6}, 0.5, 2.5))});
  int free = 0;
  for (int i = 0; i < 3000; ++i) {
    Point a{oracle::uniform(rng, 0, 10), oracle::uniform(rng, 0, 10)};
    Point b{oracle::uniform(rng, 0, 10), oracle::uniform(rng, 0, 10)};
    // Some queries run exactly through polygon vertices.
    if (i % 3 == 0) a = p.holes()[0][i % p.holes()[0].size()];
    if (i % 5 == 0) b = p.holes()[1][i % p.holes()[1].size()];
    const bool expected = oracle::segmentFree(p, a, b);
    EXPECT_EQ(contains(p, Segment{a, b}), expected) << a.x << "," << a.y << " " << b.x << "," << b.y;
    free += expected;
  }
  EXPECT_GT(free, 300);
}

}  // namespace
}  // namespace polycover
