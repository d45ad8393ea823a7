#include "polycover/benchmark.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <thread>

namespace polycover {

const std::vector<std::string>& benchmarkConfigNames() {
  static const std::vector<std::string> names{"our_bcd", "our_tcd", "one_dir", "exact"};
  return names;
}

PlannerConfig benchmarkPlannerConfig(const std::string& name, const MapFile& map,
                                     const BenchmarkOptions& options) {
  PlannerConfig c;
  c.cost = options.cost;
  c.sweep_distance = map.defaults.sweep_distance.value_or(options.sweep_distance);
  c.wall_distance = map.defaults.wall_distance.value_or(options.wall_distance);
  c.start = map.defaults.start;
  c.goal = map.defaults.goal;
  c.seed = options.seed;
  c.memetic.time_limit_s = options.budget_s;
  c.exact.time_limit_s = options.budget_s;
  c.threads = options.jobs > 1 ? 1 : 0;
  if (name == "our_bcd" || name == "one_dir") {
    c.decomposition = DecompositionKind::kBcd;
  } else if (name == "our_tcd") {
    c.decomposition = DecompositionKind::kTcd;
  } else if (name == "exact") {
    c.decomposition = DecompositionKind::kBcd;
    c.solver = SolverKind::kExact;
  } else {
    throw CoverageError(ErrorKind::kInvalidInput, "unknown benchmark config \"" + name + "\"");
  }
  return c;
}

std::string csvHeader() {
  return "version,map_id,config,status,hole_vertices,cells,nodes,edges,"
         "t_cells,t_sweeps,t_nodes,t_pruning,t_edges,t_solve,t_total,path_cost,message";
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// Commas and quotes would break the row.
std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::string statusOf(const CoverageError& e) {
  switch (e.kind()) {
    case ErrorKind::kIntractable:
      return e.message().find("time limit") != std::string::npos ? "timeout" : "intractable";
    case ErrorKind::kInvalidInput:
      return "invalid";
    case ErrorKind::kGeometry:
      return "geometry";
    case ErrorKind::kNoPath:
      return "no_path";
  }
  return "error";
}

}  // namespace

std::string csvRow(const BenchmarkRecord& r) {
  const StageTimings& t = r.timings;
  std::string row = std::to_string(kCsvVersion) + "," + csvField(r.map_id) + "," +
                    csvField(r.config) + "," + r.status + "," +
                    std::to_string(r.hole_vertices) + "," + std::to_string(r.cells) + "," +
                    std::to_string(r.nodes) + "," + std::to_string(r.edges);
  for (double v : {t.cells, t.sweeps, t.nodes, t.pruning, t.edges, t.solve, r.total_s}) {
    row += "," + num(v);
  }
  char cost[40];
  std::snprintf(cost, sizeof cost, "%.9g", r.path_cost);
  row += r.status == "ok" ? std::string(",") + cost : std::string(",");
  return row + "," + csvField(r.message);
}

BenchmarkRecord runOne(const MapFile& map, const std::string& config,
                       const BenchmarkOptions& options) {
  BenchmarkRecord r;
  r.map_id = map.name;
  r.config = config;
  r.hole_vertices = map.polygon.holeVertexCount();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const PlannerConfig pc = benchmarkPlannerConfig(config, map, options);
    const CoveragePath p =
        config == "one_dir" ? planOneDirection(map.polygon, pc) : plan(map.polygon, pc);
    r.cells = p.stats.cells;
    r.nodes = p.stats.nodes;
    r.edges = p.stats.arcs;
    r.timings = p.stats.timings;
    r.path_cost = p.total_cost;
  } catch (const CoverageError& e) {
    r.status = statusOf(e);
    r.message = e.what();
  } catch (const std::exception& e) {
    r.status = "error";
    r.message = e.what();
  }
  r.total_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<BenchmarkRecord> runBenchmark(const std::vector<MapFile>& maps,
                                          const BenchmarkOptions& options, std::ostream* csv) {
  for (const std::string& c : options.configs) {
    const auto& names = benchmarkConfigNames();
    if (std::find(names.begin(), names.end(), c) == names.end()) {
      throw CoverageError(ErrorKind::kInvalidInput, "unknown benchmark config \"" + c + "\"");
    }
  }
  const std::size_t num_configs = options.configs.size();
  const std::size_t total = maps.size() * num_configs;
  std::vector<BenchmarkRecord> records(total);
  std::vector<char> done(total, 0);

  std::mutex writer;
  std::size_t next_row = 0;
  if (csv) *csv << csvHeader() << "\n" << std::flush;

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < total;) {
      BenchmarkRecord r = runOne(maps[k / num_configs], options.configs[k % num_configs], options);
      std::lock_guard<std::mutex> lock(writer);
      records[k] = std::move(r);
      done[k] = 1;
      // Emit every finished row that is next in pair order.
      while (next_row < total && done[next_row]) {
        if (csv) *csv << csvRow(records[next_row]) << "\n" << std::flush;
        ++next_row;
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(total)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return records;
}

}  // namespace polycover
