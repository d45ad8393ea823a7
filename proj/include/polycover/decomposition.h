#pragma once

#include <span>
#include <string>
#include <vector>

#include "polycover/geometry.h"

namespace polycover {

enum class DecompositionKind { kBcd, kTcd };

std::string toString(DecompositionKind kind);
DecompositionKind decompositionKindFromString(const std::string& name);

// A cell of a scan-line decomposition. Every line perpendicular to
// `monotone_axis` meets the ring in at most one connected set.
struct Cell {
  int id = 0;
  Ring ring;
  Direction monotone_axis;
};

struct Decomposition {
  std::vector<Cell> cells;
  Direction scan_direction;
  DecompositionKind kind = DecompositionKind::kBcd;
  double altitude_sum = 0.0;
};

// Boustrophedon decomposition: cells are only cut where the scan line's
// connectivity changes (split and merge events).
std::vector<Cell> decomposeBcd(const PolygonWithHoles& pwh, Direction scan);

// Trapezoidal (vertical) decomposition: a cut is extended from every vertex
// up and down to the nearest boundary.
std::vector<Cell> decomposeTcd(const PolygonWithHoles& pwh, Direction scan);

std::vector<Cell> decompose(const PolygonWithHoles& pwh, Direction scan,
                            DecompositionKind kind);

// Sum over cells of the extent along each cell's monotone axis.
double altitudeSum(std::span<const Cell> cells);

// Tries every edge direction of the polygon and keeps the decomposition with
// the smallest altitude sum; ties go to fewer cells, then the smaller angle.
Decomposition bestDecomposition(const PolygonWithHoles& pwh,
                                DecompositionKind kind);

}  // namespace polycover
