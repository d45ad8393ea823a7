#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "polycover/geometry.h"
#include "polycover/planner.h"

namespace polycover {

// Planner settings a map may carry along.
struct MapDefaults {
  std::optional<double> sweep_distance;
  std::optional<double> wall_distance;
  std::optional<Point> start;
  std::optional<Point> goal;

  friend bool operator==(const MapDefaults&, const MapDefaults&) = default;
};

struct MapFile {
  std::string name;
  PolygonWithHoles polygon;
  MapDefaults defaults;

  friend bool operator==(const MapFile&, const MapFile&) = default;
};

// JSON map documents. Malformed documents throw kInvalidInput.
MapFile parseMap(const std::string& text);
std::string serializeMap(const MapFile& map);
MapFile loadMap(const std::filesystem::path& path);
void saveMap(const std::filesystem::path& path, const MapFile& map);

// JSON plan document. Timings are the only run-dependent fields and can be
// left out.
std::string serializePlan(const CoveragePath& plan, const PlannerConfig& config,
                          bool include_timings = true);

// The parts of a plan document needed to draw it.
struct PlanDrawing {
  std::vector<Ring> cells;
  Polyline path;
  std::vector<SegmentTag> tags;
};

PlanDrawing parsePlan(const std::string& text);

std::string readFile(const std::filesystem::path& path);
void writeFile(const std::filesystem::path& path, const std::string& text);

}  // namespace polycover
