#include "polycover/map_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace polycover {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kMapFormat = "polycover-map";
constexpr const char* kPlanFormat = "polycover-plan";
constexpr int kVersion = 1;

[[noreturn]] void bad(const std::string& what) {
  throw CoverageError(ErrorKind::kInvalidInput, "malformed document: " + what);
}

ordered_json pointJson(const Point& p) { return ordered_json::array({p.x, p.y}); }

ordered_json ringJson(const Ring& r) {
  ordered_json out = ordered_json::array();
  for (const Point& p : r.vertices()) out.push_back(pointJson(p));
  return out;
}

ordered_json polylineJson(const Polyline& p) {
  ordered_json out = ordered_json::array();
  for (const Point& q : p.waypoints) out.push_back(pointJson(q));
  return out;
}

Point pointFrom(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    bad("a point must be [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Point> pointsFrom(const json& j) {
  if (!j.is_array()) bad("expected a list of points");
  std::vector<Point> pts;
  for (const json& p : j) pts.push_back(pointFrom(p));
  return pts;
}

json parseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
}

void checkFormat(const json& doc, const char* format) {
  if (!doc.is_object() || doc.value("format", "") != format) {
    bad(std::string("expected format \"") + format + "\"");
  }
  if (doc.value("version", 0) != kVersion) bad("unsupported version");
}

const char* tagName(SegmentTag t) { return t == SegmentTag::kSweep ? "sweep" : "transition"; }

}  // namespace

MapFile parseMap(const std::string& text) {
  const json doc = parseJson(text);
  checkFormat(doc, kMapFormat);
  if (doc.contains("units") && doc["units"] != "m") bad("units must be \"m\"");
  if (!doc.contains("outer")) bad("missing \"outer\"");

  std::vector<Ring> holes;
  if (doc.contains("holes")) {
    if (!doc["holes"].is_array()) bad("\"holes\" must be a list of rings");
    for (const json& h : doc["holes"]) holes.emplace_back(pointsFrom(h));
  }
  MapFile map{doc.value("name", ""),
              PolygonWithHoles(Ring(pointsFrom(doc["outer"])), std::move(holes)), {}};

  if (doc.contains("defaults")) {
    const json& d = doc["defaults"];
    if (!d.is_object()) bad("\"defaults\" must be an object");
    auto number = [&](const char* key) -> std::optional<double> {
      if (!d.contains(key)) return std::nullopt;
      if (!d[key].is_number()) bad(std::string("\"") + key + "\" must be a number");
      return d[key].get<double>();
    };
    map.defaults.sweep_distance = number("sweep_distance");
    map.defaults.wall_distance = number("wall_distance");
    if (d.contains("start")) map.defaults.start = pointFrom(d["start"]);
    if (d.contains("goal")) map.defaults.goal = pointFrom(d["goal"]);
  }
  return map;
}

std::string serializeMap(const MapFile& map) {
  ordered_json doc;
  doc["format"] = kMapFormat;
  doc["version"] = kVersion;
  doc["units"] = "m";
  doc["name"] = map.name;
  doc["outer"] = ringJson(map.polygon.outer());
  doc["holes"] = ordered_json::array();
  for (const Ring& h : map.polygon.holes()) doc["holes"].push_back(ringJson(h));
  ordered_json d = ordered_json::object();
  if (map.defaults.sweep_distance) d["sweep_distance"] = *map.defaults.sweep_distance;
  if (map.defaults.wall_distance) d["wall_distance"] = *map.defaults.wall_distance;
  if (map.defaults.start) d["start"] = pointJson(*map.defaults.start);
  if (map.defaults.goal) d["goal"] = pointJson(*map.defaults.goal);
  if (!d.empty()) doc["defaults"] = d;
  return doc.dump(2) + "\n";
}

std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CoverageError(ErrorKind::kInvalidInput, "cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void writeFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw CoverageError(ErrorKind::kInvalidInput, "cannot write " + path.string());
}

MapFile loadMap(const std::filesystem::path& path) {
  try {
    return parseMap(readFile(path));
  } catch (const CoverageError& e) {
    throw CoverageError(e.kind(), path.string() + ": " + e.message());
  }
}

void saveMap(const std::filesystem::path& path, const MapFile& map) {
  writeFile(path, serializeMap(map));
}

std::string serializePlan(const CoveragePath& plan, const PlannerConfig& config,
                          bool include_timings) {
  ordered_json doc;
  doc["format"] = kPlanFormat;
  doc["version"] = kVersion;

  ordered_json cfg;
  cfg["decomposition"] = toString(config.decomposition);
  cfg["cost"] = toString(config.cost.kind);
  cfg["v_max"] = config.cost.v_max;
  cfg["a_max"] = config.cost.a_max;
  cfg["sweep_distance"] = config.sweep_distance;
  cfg["wall_distance"] = config.wall_distance;
  cfg["solver"] = toString(config.solver);
  cfg["seed"] = config.seed;
  doc["config"] = cfg;

  doc["cost"] = plan.total_cost;
  ordered_json stats;
  stats["cells"] = plan.stats.cells;
  stats["nodes"] = plan.stats.nodes;
  stats["edges"] = plan.stats.arcs;
  doc["stats"] = stats;
  if (include_timings) {
    const StageTimings& t = plan.stats.timings;
    doc["timings"] = {{"cells", t.cells},     {"sweeps", t.sweeps}, {"nodes", t.nodes},
                      {"pruning", t.pruning}, {"edges", t.edges},   {"solve", t.solve}};
  }

  ordered_json dec;
  dec["kind"] = toString(plan.decomposition.kind);
  dec["scan_direction"] = plan.decomposition.scan_direction.radians();
  dec["altitude_sum"] = plan.decomposition.altitude_sum;
  dec["cells"] = ordered_json::array();
  for (const Cell& c : plan.decomposition.cells) {
    dec["cells"].push_back({{"id", c.id},
                            {"monotone_axis", c.monotone_axis.radians()},
                            {"ring", ringJson(c.ring)}});
  }
  doc["decomposition"] = dec;

  doc["visits"] = ordered_json::array();
  for (const SweepPattern& p : plan.patterns) {
    doc["visits"].push_back({{"cell", p.cell_id},
                             {"sweep_direction", p.sweep_direction.radians()},
                             {"variant", toString(p.variant)}});
  }
  doc["waypoints"] = polylineJson(plan.path);
  doc["tags"] = ordered_json::array();
  for (SegmentTag t : plan.tags) doc["tags"].push_back(tagName(t));
  return doc.dump(2) + "\n";
}

PlanDrawing parsePlan(const std::string& text) {
  const json doc = parseJson(text);
  checkFormat(doc, kPlanFormat);
  PlanDrawing out;
  if (doc.contains("decomposition")) {
    for (const json& c : doc["decomposition"].value("cells", json::array())) {
      if (!c.contains("ring")) bad("cell without ring");
      out.cells.emplace_back(pointsFrom(c["ring"]));
    }
  }
  if (doc.contains("waypoints")) out.path.waypoints = pointsFrom(doc["waypoints"]);
  if (doc.contains("tags")) {
    for (const json& t : doc["tags"]) {
      if (t == "sweep") {
        out.tags.push_back(SegmentTag::kSweep);
      } else if (t == "transition") {
        out.tags.push_back(SegmentTag::kTransition);
      } else {
        bad("unknown segment tag");
      }
    }
  }
  if (!out.path.waypoints.empty() && out.tags.size() + 1 != out.path.waypoints.size()) {
    bad("tag count does not match the waypoints");
  }
  return out;
}

}  // namespace polycover
