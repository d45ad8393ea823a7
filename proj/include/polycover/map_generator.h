#pragma once

#include <cstdint>
#include <vector>

#include "polycover/map_io.h"

namespace polycover {

// Random 100 x 100 m worlds with convex obstacles of 4 to 8 vertices and 2 to
// 15 m extent, kept 3 m apart from each other and from the walls.
struct GeneratorOptions {
  double world_size = 100.0;
  double min_extent = 2.0;
  double max_extent = 15.0;
  double separation = 3.0;
  int min_vertices = 4;
  int max_vertices = 8;
  int max_attempts = 10000;
};

// One map; the result only depends on (obstacles, seed, index).
MapFile generateMap(int obstacles, std::uint64_t seed, std::uint64_t index,
                    const GeneratorOptions& options = {});

// `count` maps whose obstacle counts cycle through [min_obstacles,
// max_obstacles]. Throws kGeometry when an obstacle cannot be placed.
std::vector<MapFile> generateMaps(int count, int min_obstacles, int max_obstacles,
                                  std::uint64_t seed, const GeneratorOptions& options = {});

}  // namespace polycover
