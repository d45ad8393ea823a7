#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "polycover/benchmark.h"
#include "polycover/map_generator.h"
#include "polycover/map_io.h"
#include "polycover/planner.h"
#include "polycover/svg.h"

namespace fs = std::filesystem;
using namespace polycover;

namespace {

int exitCode(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
      return 2;
    case ErrorKind::kIntractable:
      return 3;
    case ErrorKind::kGeometry:
    case ErrorKind::kNoPath:
      return 4;
  }
  return 1;
}

Point parsePoint(const std::string& text) {
  std::istringstream in(text);
  Point p;
  char comma = 0;
  if (!(in >> p.x >> comma >> p.y) || comma != ',' || !(in >> std::ws).eof()) {
    throw CoverageError(ErrorKind::kInvalidInput, "expected X,Y but got \"" + text + "\"");
  }
  return p;
}

std::vector<std::string> splitList(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct PlanArgs {
  std::string map;
  std::optional<double> sweep_distance;
  std::optional<double> wall_distance;
  std::string decomposition = "bcd";
  std::string cost = "time";
  double v_max = 3.0;
  double a_max = 0.5;
  std::string solver = "memetic";
  std::uint64_t seed = 0;
  std::string start, goal;
  std::string out, svg, dump_gtsp;
  bool one_dir = false;
  bool no_timings = false;
};

int runPlan(const PlanArgs& a) {
  const MapFile map = loadMap(a.map);
  PlannerConfig config;
  config.decomposition = decompositionKindFromString(a.decomposition);
  const CostKind kind = costKindFromString(a.cost);
  config.cost = kind == CostKind::kTime ? CostModel::time(a.v_max, a.a_max)
                                        : CostModel{kind, a.v_max, a.a_max};
  config.sweep_distance = a.sweep_distance.value_or(map.defaults.sweep_distance.value_or(10.0));
  config.wall_distance = a.wall_distance.value_or(map.defaults.wall_distance.value_or(0.0));
  config.solver = solverKindFromString(a.solver);
  config.seed = a.seed;
  config.start = a.start.empty() ? map.defaults.start : std::optional(parsePoint(a.start));
  config.goal = a.goal.empty() ? map.defaults.goal : std::optional(parsePoint(a.goal));

  const CoveragePath path =
      a.one_dir ? planOneDirection(map.polygon, config) : plan(map.polygon, config);
  const std::string json = serializePlan(path, config, !a.no_timings);
  if (a.out.empty()) {
    std::cout << json;
  } else {
    writeFile(a.out, json);
  }
  if (!a.dump_gtsp.empty()) {
    std::ostringstream dump;
    writeGtspMatrix(dump, *path.graph);
    writeFile(a.dump_gtsp, dump.str());
  }
  if (!a.svg.empty()) {
    SvgOverlay overlay;
    for (const Cell& c : path.decomposition.cells) overlay.cells.push_back(c.ring);
    overlay.path = path.path;
    overlay.tags = path.tags;
    writeFile(a.svg, renderSvg(map.polygon, overlay));
  }
  std::cerr << "cost " << path.total_cost << " | cells " << path.stats.cells << " | nodes "
            << path.stats.nodes << " | edges " << path.stats.arcs << "\n";
  return 0;
}

int runGenMaps(int count, const std::string& obstacles, std::uint64_t seed,
               const std::string& out_dir) {
  int lo = 0, hi = 0;
  const auto dash = obstacles.find('-');
  try {
    lo = std::stoi(obstacles.substr(0, dash));
    hi = dash == std::string::npos ? lo : std::stoi(obstacles.substr(dash + 1));
  } catch (const std::exception&) {
    throw CoverageError(ErrorKind::kInvalidInput, "--obstacles expects N or A-B");
  }
  if (hi > 15) throw CoverageError(ErrorKind::kInvalidInput, "at most 15 obstacles per map");
  fs::create_directories(out_dir);
  for (const MapFile& m : generateMaps(count, lo, hi, seed)) {
    saveMap(fs::path(out_dir) / (m.name + ".json"), m);
  }
  std::cerr << "wrote " << count << " maps to " << out_dir << "\n";
  return 0;
}

int runBench(const std::string& maps_dir, const std::string& configs, BenchmarkOptions options,
             const std::string& csv_path) {
  std::vector<fs::path> files;
  if (!fs::is_directory(maps_dir)) {
    throw CoverageError(ErrorKind::kInvalidInput, "not a directory: " + maps_dir);
  }
  for (const auto& entry : fs::directory_iterator(maps_dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<MapFile> maps;
  for (const fs::path& f : files) {
    maps.push_back(loadMap(f));
    if (maps.back().name.empty()) maps.back().name = f.stem().string();
  }
  options.configs = splitList(configs);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!csv_path.empty()) {
    file.open(csv_path);
    if (!file) throw CoverageError(ErrorKind::kInvalidInput, "cannot write " + csv_path);
    out = &file;
  }
  const auto records = runBenchmark(maps, options, out);
  std::size_t failed = 0;
  for (const auto& r : records) failed += r.status != "ok";
  std::cerr << records.size() << " runs, " << failed << " tagged failures\n";
  return 0;
}

int runRender(const std::string& map_path, const std::string& plan_path,
              const std::string& svg_path) {
  const MapFile map = loadMap(map_path);
  SvgOverlay overlay;
  if (!plan_path.empty()) {
    PlanDrawing d = parsePlan(readFile(plan_path));
    overlay.cells = std::move(d.cells);
    overlay.path = std::move(d.path);
    overlay.tags = std::move(d.tags);
  }
  const std::string svg = renderSvg(map.polygon, overlay);
  if (svg_path.empty()) {
    std::cout << svg;
  } else {
    writeFile(svg_path, svg);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boustrophedon coverage planning over polygons with holes"};
  app.require_subcommand(1);

  PlanArgs pa;
  auto* plan_cmd = app.add_subcommand("plan", "Plan a coverage path for one map");
  plan_cmd->add_option("--map", pa.map, "Map JSON file")->required();
  plan_cmd->add_option("--sweep-distance", pa.sweep_distance, "Distance between sweep lines [m]");
  plan_cmd->add_option("--wall-distance", pa.wall_distance, "Clearance to all boundaries [m]");
  plan_cmd->add_option("--decomposition", pa.decomposition)->check(CLI::IsMember({"bcd", "tcd"}));
  plan_cmd->add_option("--cost", pa.cost)->check(CLI::IsMember({"time", "distance", "waypoints"}));
  plan_cmd->add_option("--v-max", pa.v_max, "Maximum velocity [m/s]");
  plan_cmd->add_option("--a-max", pa.a_max, "Maximum acceleration [m/s^2]");
  plan_cmd->add_option("--solver", pa.solver)->check(CLI::IsMember({"memetic", "exact"}));
  plan_cmd->add_option("--seed", pa.seed);
  plan_cmd->add_option("--start", pa.start, "Start point X,Y");
  plan_cmd->add_option("--goal", pa.goal, "Goal point X,Y");
  plan_cmd->add_option("--out", pa.out, "Plan JSON output (default: stdout)");
  plan_cmd->add_option("--svg", pa.svg, "Optional SVG rendering of the plan");
  plan_cmd->add_option("--dump-gtsp", pa.dump_gtsp, "Write the E-GTSP instance as a text matrix");
  plan_cmd->add_flag("--one-dir", pa.one_dir, "Fixed-direction baseline planner");
  plan_cmd->add_flag("--no-timings", pa.no_timings, "Leave timings out of the JSON");

  int count = 10;
  std::string obstacles = "0-15";
  std::uint64_t gen_seed = 0;
  std::string out_dir = "maps";
  auto* gen_cmd = app.add_subcommand("gen-maps", "Generate random obstacle maps");
  gen_cmd->add_option("--count", count)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--obstacles", obstacles, "Obstacle count N or range A-B");
  gen_cmd->add_option("--seed", gen_seed);
  gen_cmd->add_option("--out-dir", out_dir);

  std::string maps_dir = "maps", configs = "our_bcd,our_tcd,one_dir,exact", csv_path;
  BenchmarkOptions bo;
  auto* bench_cmd = app.add_subcommand("bench", "Run planner configurations over a map set");
  bench_cmd->add_option("--maps-dir", maps_dir);
  bench_cmd->add_option("--configs", configs, "Comma-separated: our_bcd,our_tcd,one_dir,exact");
  bench_cmd->add_option("--budget-s", bo.budget_s, "Solver time budget per run [s]");
  bench_cmd->add_option("--jobs", bo.jobs)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--csv", csv_path, "CSV output (default: stdout)");
  bench_cmd->add_option("--sweep-distance", bo.sweep_distance);
  bench_cmd->add_option("--wall-distance", bo.wall_distance);
  bench_cmd->add_option("--seed", bo.seed);

  std::string render_map, render_plan, render_svg;
  auto* render_cmd = app.add_subcommand("render", "Draw a map and optionally a plan as SVG");
  render_cmd->add_option("--map", render_map)->required();
  render_cmd->add_option("--plan", render_plan);
  render_cmd->add_option("--svg", render_svg, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*plan_cmd) return runPlan(pa);
    if (*gen_cmd) return runGenMaps(count, obstacles, gen_seed, out_dir);
    if (*bench_cmd) return runBench(maps_dir, configs, bo, csv_path);
    if (*render_cmd) return runRender(render_map, render_plan, render_svg);
  } catch (const CoverageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exitCode(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
