#pragma once

#include <string>
#include <vector>

#include "polycover/geometry.h"
#include "polycover/sweep.h"

namespace polycover {

// Optional layers drawn on top of the map.
struct SvgOverlay {
  std::vector<Ring> cells;
  Polyline path;
  std::vector<SegmentTag> tags;  // one per path segment
};

// 1000 x 1000 px drawing scaled to the outer ring's bounds. Output depends
// only on the inputs.
std::string renderSvg(const PolygonWithHoles& map, const SvgOverlay& overlay = {});

}  // namespace polycover
