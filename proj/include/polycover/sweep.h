#pragma once

#include <span>
#include <string>
#include <vector>

#include "polycover/decomposition.h"
#include "polycover/geometry.h"
#include "polycover/visibility.h"

namespace polycover {

// Which way the first straight segment runs, seen as a walk around the cell
// boundary: counter-clockwise along the bottom is left to right, along the
// top it is right to left.
enum class StartSide { kClockwise, kCounterClockwise };
enum class SweepOrder { kBottomUp, kTopDown };

struct SweepVariant {
  StartSide side = StartSide::kCounterClockwise;
  SweepOrder order = SweepOrder::kBottomUp;

  friend bool operator==(const SweepVariant&, const SweepVariant&) = default;
};

std::string toString(const SweepVariant& v);

enum class SegmentTag { kSweep, kTransition };

// Boustrophedon path covering one cell: straight segments parallel to
// `sweep_direction` joined by shortest-path transitions.
struct SweepPattern {
  int cell_id = 0;
  Polyline path;
  std::vector<SegmentTag> tags;  // one per segment of `path`
  Direction sweep_direction;
  SweepVariant variant;

  const Point& start() const { return path.front(); }
  const Point& goal() const { return path.back(); }
};

// Edge directions of the cell (plus `extra` candidates) along which the cell
// can be swept, i.e. the cell is monotone perpendicular to them. The
// perpendicular of the cell's monotone axis is always included.
std::vector<Direction> sweepableDirections(const Cell& cell,
                                           std::span<const Direction> extra = {});

// Chords of the cell parallel to `sweep`, bottom to top in the frame where
// `sweep` is the x-axis, each running left to right in that frame.
std::vector<Segment> straightSegments(const Cell& cell, Direction sweep,
                                      double sweep_distance);

// How far the cell reaches past a chord's ends along `sweep` within the strip
// that chord is responsible for (halfway to its neighbours). Cell points off
// the chord's extent by more than sweep_distance / 2 are left uncovered.
double chordOverhang(const Cell& cell, Direction sweep, double sweep_distance);

// The four start-side x order variants for one sweep direction, duplicates
// removed.
std::vector<SweepPattern> permutations(const Cell& cell, Direction sweep,
                                       const VisibilityGraph& vis,
                                       const PolygonWithHoles& pwh,
                                       double sweep_distance);

// Patterns for every sweepable direction whose chord overhang stays within
// half a sweep distance or the overhang of the cell's own direction, which is
// always kept.
std::vector<SweepPattern> allPatterns(const Cell& cell, const VisibilityGraph& vis,
                                      const PolygonWithHoles& pwh,
                                      double sweep_distance);

// A single variant, used by the fixed-direction baseline planner.
SweepPattern pattern(const Cell& cell, Direction sweep, SweepVariant variant,
                     const VisibilityGraph& vis, const PolygonWithHoles& pwh,
                     double sweep_distance);

// The pattern traversed backwards; still a valid cover of the same cell.
SweepPattern reversed(const SweepPattern& p);

}  // namespace polycover
