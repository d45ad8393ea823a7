#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "polycover/map_io.h"
#include "polycover/planner.h"

namespace polycover {

// our_bcd, our_tcd, one_dir, exact
const std::vector<std::string>& benchmarkConfigNames();

struct BenchmarkOptions {
  std::vector<std::string> configs = benchmarkConfigNames();
  double budget_s = 200.0;  // per (map, config) solve
  unsigned jobs = 1;
  double sweep_distance = 5.0;
  double wall_distance = 0.5;
  CostModel cost;
  std::uint64_t seed = 0;
};

// Planner settings behind a named configuration; map defaults win over the
// benchmark-wide distances.
PlannerConfig benchmarkPlannerConfig(const std::string& name, const MapFile& map,
                                     const BenchmarkOptions& options);

struct BenchmarkRecord {
  std::string map_id;
  std::string config;
  std::string status = "ok";  // ok, intractable, timeout, invalid, geometry, no_path
  std::size_t hole_vertices = 0;
  std::size_t cells = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  StageTimings timings;
  double total_s = 0.0;
  double path_cost = 0.0;
  std::string message;
};

inline constexpr int kCsvVersion = 1;
std::string csvHeader();
std::string csvRow(const BenchmarkRecord& record);

BenchmarkRecord runOne(const MapFile& map, const std::string& config,
                       const BenchmarkOptions& options);

// Every (map, config) pair, maps outermost. Failures become tagged records.
// Rows go to `csv` (header first) in pair order as soon as they are ready.
std::vector<BenchmarkRecord> runBenchmark(const std::vector<MapFile>& maps,
                                          const BenchmarkOptions& options,
                                          std::ostream* csv = nullptr);

}  // namespace polycover
