#include "polycover/map_io.h"

#include <gtest/gtest.h>

#include <filesystem>

#include "polycover/error.h"

namespace polycover {
namespace {

MapFile sample() {
  MapFile m{"demo",
            PolygonWithHoles(Ring({{0, 0}, {20, 0}, {20, 10}, {0, 10}}),
                             {Ring({{5, 4}, {5, 6}, {7, 6}, {7, 4}})}),
            {}};
  m.defaults.sweep_distance = 2.0;
  m.defaults.start = Point{1, 1};
  return m;
}

TEST(MapIo, RoundTrip) {
  const MapFile m = sample();
  const std::string text = serializeMap(m);
  EXPECT_EQ(parseMap(text), m);
  EXPECT_EQ(serializeMap(parseMap(text)), text);

  const auto path = std::filesystem::temp_directory_path() / "polycover_map_io_test.json";
  saveMap(path, m);
  EXPECT_EQ(loadMap(path), m);
  std::filesystem::remove(path);
}

TEST(MapIo, MinimalDocument) {
  const MapFile m = parseMap(R"({"format":"polycover-map","version":1,"outer":[[0,0],[1,0],[1,1]]})");
  EXPECT_TRUE(m.polygon.holes().empty());
  EXPECT_FALSE(m.defaults.sweep_distance.has_value());
}

TEST(MapIo, RejectsMalformed) {
  const std::string bad[] = {
      "not json",
      R"({"format":"other","version":1,"outer":[[0,0],[1,0],[1,1]]})",
      R"({"format":"polycover-map","version":9,"outer":[[0,0],[1,0],[1,1]]})",
      R"({"format":"polycover-map","version":1})",
      R"({"format":"polycover-map","version":1,"outer":[[0,0],[1,0]]})",
      R"({"format":"polycover-map","version":1,"outer":[[0,0],[1,0],["a",1]]})",
      R"({"format":"polycover-map","version":1,"outer":[[0,0],[2,2],[2,0],[0,2]]})",
      R"({"format":"polycover-map","version":1,"outer":[[0,0],[1,0],[1,1]],"holes":[[[5,5],[6,5],[6,6]]]})",
  };
  for (const std::string& text : bad) {
    try {
      parseMap(text);
      ADD_FAILURE() << text;
    } catch (const CoverageError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInvalidInput) << text;
    }
  }
  EXPECT_THROW(loadMap("/nonexistent/map.json"), CoverageError);
}

TEST(PlanIo, SerializeAndParse) {
  const MapFile m = sample();
  PlannerConfig config;
  config.sweep_distance = 2.0;
  const CoveragePath p = plan(m.polygon, config);
  const std::string with = serializePlan(p, config, true);
  const std::string without = serializePlan(p, config, false);
  EXPECT_NE(with.find("timings"), std::string::npos);
  EXPECT_EQ(without.find("timings"), std::string::npos);

  const PlanDrawing d = parsePlan(without);
  EXPECT_EQ(d.cells.size(), p.stats.cells);
  ASSERT_EQ(d.path.waypoints.size(), p.path.waypoints.size());
  for (std::size_t i = 0; i < d.path.waypoints.size(); ++i) {
    EXPECT_NEAR(distance(d.path.waypoints[i], p.path.waypoints[i]), 0.0, 1e-9);
  }
  EXPECT_EQ(d.tags, p.tags);
  EXPECT_THROW(parsePlan("{}"), CoverageError);
}

}  // namespace
}  // namespace polycover
