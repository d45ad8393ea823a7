#include "polycover/benchmark.h"

#include <gtest/gtest.h>

#include <sstream>

#include "polycover/map_generator.h"

namespace polycover {
namespace {

TEST(Csv, HeaderIsStable) {
  EXPECT_EQ(csvHeader(),
            "version,map_id,config,status,hole_vertices,cells,nodes,edges,t_cells,t_sweeps,"
            "t_nodes,t_pruning,t_edges,t_solve,t_total,path_cost,message");
}

TEST(Csv, RowQuotesMessages) {
  BenchmarkRecord r;
  r.map_id = "m";
  r.config = "exact";
  r.status = "intractable";
  r.message = "too many states, \"really\"";
  const std::string row = csvRow(r);
  EXPECT_EQ(row.rfind("1,m,exact,intractable,", 0), 0u);
  EXPECT_NE(row.find("\"too many states, \"\"really\"\"\""), std::string::npos);
}

TEST(Benchmark, ConfigsAndOrder) {
  EXPECT_EQ(benchmarkConfigNames(), (std::vector<std::string>{"our_bcd", "our_tcd", "one_dir", "exact"}));
  const std::vector<MapFile> maps{generateMap(0, 1, 0), generateMap(2, 1, 1)};
  BenchmarkOptions options;
  options.jobs = 2;
  std::ostringstream csv;
  const auto records = runBenchmark(maps, options, &csv);
  ASSERT_EQ(records.size(), 8u);
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(records[i].map_id, maps[i / 4].name);
    EXPECT_EQ(records[i].config, benchmarkConfigNames()[i % 4]);
    EXPECT_EQ(records[i].status, "ok") << records[i].message;
    EXPECT_GT(records[i].path_cost, 0.0);
  }
  // Header plus one line per record.
  const std::string text = csv.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 9);
  EXPECT_EQ(text.rfind(csvHeader(), 0), 0u);
}

TEST(Benchmark, FailuresAreTagged) {
  MapFile m = generateMap(1, 1, 0);
  BenchmarkOptions options;
  options.wall_distance = 60.0;
  EXPECT_EQ(runOne(m, "our_bcd", options).status, "geometry");
  options.wall_distance = 0.5;
  options.sweep_distance = -1.0;
  EXPECT_EQ(runOne(m, "our_bcd", options).status, "invalid");
  options.sweep_distance = 5.0;
  EXPECT_EQ(runOne(m, "nonsense", options).status, "invalid");
  const BenchmarkRecord big = runOne(generateMap(12, 1, 0), "exact", options);
  EXPECT_TRUE(big.status == "intractable" || big.status == "timeout") << big.status;
  EXPECT_FALSE(big.message.empty());
}

}  // namespace
}  // namespace polycover
