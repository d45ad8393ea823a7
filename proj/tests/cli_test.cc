// End-to-end runs of the command-line tool.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>

#include "polycover/map_generator.h"
#include "polycover/map_io.h"

namespace fs = std::filesystem;
using namespace polycover;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("polycover_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string& args) {
    const std::string cmd = std::string(POLYCOVER_CLI) + " " + args + " >" +
                            (dir_ / "stdout").string() + " 2>" + (dir_ / "stderr").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string mapFile(int obstacles, std::uint64_t index = 0) {
    const std::string p = path("map_" + std::to_string(obstacles) + ".json");
    saveMap(p, generateMap(obstacles, 3, index));
    return p;
  }

  fs::path dir_;
};

TEST_F(Cli, PlanWritesJsonAndSvg) {
  const std::string map = mapFile(2);
  EXPECT_EQ(run("plan --map " + map + " --sweep-distance 5 --out " + path("plan.json") + " --svg " +
                path("plan.svg")),
            0);
  const std::string json = readFile(path("plan.json"));
  EXPECT_NE(json.find("\"polycover-plan\""), std::string::npos);
  EXPECT_NE(json.find("\"timings\""), std::string::npos);
  EXPECT_NE(readFile(path("plan.svg")).find("<svg"), std::string::npos);

  EXPECT_EQ(run("render --map " + map + " --plan " + path("plan.json") + " --svg " + path("r.svg")), 0);
  EXPECT_NE(readFile(path("r.svg")).find("<polyline"), std::string::npos);
}

TEST_F(Cli, PlanVariants) {
  const std::string map = mapFile(3);
  for (const std::string flags :
       {"--decomposition tcd", "--cost distance", "--cost waypoints", "--solver exact", "--one-dir",
        "--v-max 5 --a-max 1", "--start 10,10 --goal 90,90"}) {
    EXPECT_EQ(run("plan --map " + map + " --sweep-distance 5 --wall-distance 0.5 " + flags), 0)
        << flags;
  }
  EXPECT_EQ(run("plan --map " + map + " --dump-gtsp " + path("g.txt") + " --out " + path("p.json")), 0);
  EXPECT_EQ(readFile(path("g.txt")).rfind("POLYCOVER_GTSP 1", 0), 0u);
}

TEST_F(Cli, ExitCodes) {
  const std::string map = mapFile(1);
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run("plan --help"), 0);
  EXPECT_EQ(run("plan"), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("plan --map " + path("missing.json")), 2);
  EXPECT_EQ(run("plan --map " + map + " --decomposition xyz"), 2);
  EXPECT_EQ(run("plan --map " + map + " --sweep-distance 0"), 2);
  EXPECT_EQ(run("plan --map " + map + " --start '1;2'"), 2);
  EXPECT_EQ(run("plan --map " + map + " --start 500,500"), 2);
  writeFile(path("bad.json"), "{\"format\":\"polycover-map\"");
  EXPECT_EQ(run("plan --map " + path("bad.json")), 2);
  EXPECT_EQ(run("plan --map " + map + " --wall-distance 60"), 4);
  EXPECT_EQ(run("plan --map " + mapFile(12) + " --solver exact --sweep-distance 5"), 3);
  EXPECT_EQ(run("gen-maps --count 1 --obstacles 20 --out-dir " + path("maps")), 2);
}

TEST_F(Cli, GenMapsAndBench) {
  ASSERT_EQ(run("gen-maps --count 3 --obstacles 0-2 --seed 4 --out-dir " + path("maps")), 0);
  EXPECT_TRUE(fs::exists(path("maps/map_0000_o00.json")));
  EXPECT_TRUE(fs::exists(path("maps/map_0002_o02.json")));
  EXPECT_EQ(loadMap(path("maps/map_0001_o01.json")), generateMap(1, 4, 1));

  ASSERT_EQ(run("bench --maps-dir " + path("maps") + " --configs our_bcd,one_dir --jobs 2 --csv " +
                path("a.csv")),
            0);
  ASSERT_EQ(run("bench --maps-dir " + path("maps") + " --configs our_bcd,one_dir --csv " +
                path("b.csv")),
            0);
  const std::string a = readFile(path("a.csv"));
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 1 + 3 * 2);

  // Cost columns agree between runs; timings may not.
  auto costs = [](const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    for (std::string line; std::getline(in, line);) {
      std::vector<std::string> cols;
      std::istringstream row(line);
      for (std::string c; std::getline(row, c, ',');) cols.push_back(c);
      out.push_back(cols[1] + cols[2] + cols[3] + cols[15]);
    }
    return out;
  };
  EXPECT_EQ(costs(a), costs(readFile(path("b.csv"))));
  EXPECT_EQ(run("bench --maps-dir " + path("maps") + " --configs nonsense"), 2);
}

}  // namespace
