// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/manifest.hpp"
#include "cli/output.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace qwalk;
using namespace qwalk::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(QWALK_TEST_TMPDIR) / ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST(FormatNumber, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(1.0), "1.0");
  EXPECT_EQ(format_number(0.0), "0.0");
  EXPECT_EQ(format_number(0.125), "0.125");
  EXPECT_EQ(format_number(45.0 / 1024.0), "0.0439453125");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_number(1.4649250386e-05), "1.4649250386e-05");
  EXPECT_EQ(format_number(30000.0), "30000.0");
}

TEST(RunCommand, ThreeSteps) {
  const auto r = invoke({"run", "--steps", "3", "--dt0", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"site", "dt0=0"}));
  std::map<int, std::string> by_site;
  for (std::size_t k = 1; k < rows.size(); ++k) by_site[std::stoi(rows[k][0])] = rows[k][1];
  EXPECT_EQ(by_site[3], "0.125");
  EXPECT_EQ(by_site[1], "0.375");
  EXPECT_EQ(by_site[-1], "0.375");
  EXPECT_EQ(by_site[-3], "0.125");
  EXPECT_EQ(by_site[0], "0.0");
}

TEST(RunCommand, ZeroSteps) {
  const auto r = invoke({"run", "--steps", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "site,dt0=0\n0,1.0\n");
}

TEST(RunCommand, FigureFourColumns) {
  const auto r = invoke({"run", "--steps", "10", "--dt0", "0,0.2,0.4,0.6", "--classical"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 22u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"site", "dt0=0", "dt0=0.2", "dt0=0.4", "dt0=0.6",
                                               "classical"}));
  EXPECT_EQ(rows.front().size(), 6u);
  // site 6 row
  EXPECT_EQ(rows[17][0], "6");
  EXPECT_EQ(rows[17][1], "0.2626953125");
  EXPECT_EQ(rows[17][5], "0.0439453125");
}

TEST(RunCommand, JsonPayload) {
  const auto r = invoke({"run", "--steps", "2", "--format", "json", "--classical"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["steps"], 2);
  ASSERT_EQ(j["columns"].size(), 2u);
  EXPECT_EQ(j["columns"][0]["label"], "dt0=0");
  EXPECT_EQ(j["columns"][0]["first_site"], -2);
  EXPECT_NEAR(j["columns"][0]["probabilities"][0].get<double>(), 0.25, 1e-15);
  EXPECT_EQ(j["columns"][1]["label"], "classical");
}

TEST(RunCommand, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"run"}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "--steps", "-1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "--steps", "x"}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "--steps", "3", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "--steps", "3", "--dt0", "0,abc"}).code, kExitUsage);
  EXPECT_EQ(invoke({"walk"}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "--steps", "3", "--lattice-halfwidth", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "--help"}).code, kExitOk);
}

TEST(RunCommand, BoundaryOverflowExitsOne) {
  const auto r = invoke({"run", "--steps", "5", "--lattice-halfwidth", "3"});
  EXPECT_EQ(r.code, kExitRuntime);
  EXPECT_NE(r.err.find("lattice edge"), std::string::npos);
  // A stalled walk never reaches the edge.
  EXPECT_EQ(invoke({"run", "--steps", "5", "--lattice-halfwidth", "3", "--dt0", "3.141592653589793"})
                .code,
            kExitOk);
}

TEST(RunCommand, Deterministic) {
  const std::vector<std::string> args{"run", "--steps", "10", "--dt0", "0,0.2,0.4,0.6", "--classical"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST_F(CliFiles, ManifestRoundTrip) {
  const auto first = invoke({"run", "--steps", "7", "--dt0", "0,0.35", "--classical", "--out", path("a.csv")});
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_TRUE(first.out.empty());
  const auto manifest = nlohmann::json::parse(slurp(path("a.csv.manifest.json")));
  EXPECT_TRUE(manifest.contains("version"));
  EXPECT_TRUE(manifest.contains("config"));
  EXPECT_TRUE(manifest.contains("outputs"));
  EXPECT_EQ(manifest["config"]["lattice_halfwidth"], 8);
  const std::string csv = slurp(path("a.csv"));
  EXPECT_EQ(manifest["outputs"]["files"][0]["sha256"], sha256_hex(csv));
  EXPECT_EQ(manifest["outputs"]["files"][0]["bytes"], csv.size());

  const auto second = invoke({"run", "--config", path("a.csv.manifest.json"), "--out", path("b.csv")});
  ASSERT_EQ(second.code, 0) << second.err;
  EXPECT_EQ(slurp(path("b.csv")), csv);

  // Wrong subcommand for the stored configuration.
  EXPECT_EQ(invoke({"trace", "--config", path("a.csv.manifest.json")}).code, kExitUsage);
  // --config cannot be combined with walk flags.
  EXPECT_EQ(invoke({"run", "--config", path("a.csv.manifest.json"), "--steps", "3"}).code, kExitUsage);
}

TEST_F(CliFiles, ExplicitManifestPathAndTraceRoundTrip) {
  const auto r = invoke({"trace", "--site", "6", "--max-steps", "12", "--dt0", "0,0.4", "--classical",
                         "--out", path("t.csv"), "--manifest", path("m.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(fs::exists(path("t.csv.manifest.json")));
  const auto again = invoke({"trace", "--config", path("m.json")});
  ASSERT_EQ(again.code, 0) << again.err;
  EXPECT_EQ(again.out, slurp(path("t.csv")));
}

TEST_F(CliFiles, MalformedConfig) {
  std::ofstream(path("bad.json")) << "{not json";
  EXPECT_EQ(invoke({"run", "--config", path("bad.json")}).code, kExitUsage);
  std::ofstream(path("partial.json")) << R"({"command": "run", "steps": 3})";
  EXPECT_EQ(invoke({"run", "--config", path("partial.json")}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "--config", path("missing.json")}).code, kExitUsage);
}

TEST(ConfigJson, RoundTripsEveryCommand) {
  RunConfig run;
  run.command = "run";
  run.steps = 9;
  run.offsets = {0.0, 0.1 + 0.2, -1e-17};
  run.classical = true;
  run.half_width = 12;
  RunConfig back = config_from_json(config_to_json(run));
  EXPECT_EQ(back.steps, 9);
  EXPECT_EQ(back.offsets, run.offsets);
  EXPECT_EQ(back.half_width, 12);
  EXPECT_TRUE(back.classical);

  RunConfig lat;
  lat.command = "lattice";
  lat.depth = 30.0;
  lat.solve = true;
  lat.target_ratio = 0.002;
  lat.has_readout_site = true;
  lat.site = -4;
  back = config_from_json(config_to_json(lat));
  EXPECT_TRUE(back.solve);
  EXPECT_EQ(back.target_ratio, 0.002);
  EXPECT_EQ(back.site, -4);
  EXPECT_THROW(config_from_json(nlohmann::json{{"command", "fly"}}), std::invalid_argument);
}

TEST(Sha256, KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(TraceCommand, FigureSixData) {
  const auto r = invoke({"trace", "--site", "6", "--max-steps", "20", "--dt0", "0,0.2,0.4,0.6", "--classical"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 22u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"step", "dt0=0", "dt0=0.2", "dt0=0.4", "dt0=0.6",
                                               "classical"}));
  int peak = 0;
  double best = -1;
  for (int n = 0; n <= 20; ++n) {
    const double v = std::stod(rows[n + 1][1]);
    if (v > best) {
      best = v;
      peak = n;
    }
  }
  EXPECT_EQ(peak, 10);
  EXPECT_NEAR(best, 0.26, 0.01);
  EXPECT_EQ(rows[11][5], "0.0439453125");
}

TEST(TraceCommand, EdgeCases) {
  auto r = invoke({"trace", "--site", "0", "--max-steps", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "step,dt0=0\n0,1.0\n");

  r = invoke({"trace", "--site", "6", "--max-steps", "5", "--classical"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 7u);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    EXPECT_EQ(rows[k][1], "0.0");
    EXPECT_EQ(rows[k][2], "0.0");
  }
  EXPECT_EQ(invoke({"trace", "--site", "6"}).code, kExitUsage);
}

TEST(LatticeCommand, DesignPoint) {
  auto r = invoke({"lattice", "--v", "25", "--vprime", "17.5", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["ratio"].get<double>(), 0.001, 0.0002);
  EXPECT_NEAR(j["adiabatic_time_us"].get<double>(), 33.3, 0.1);
  EXPECT_NEAR(j["theta"].get<double>(), 1.5707963267948966, 1e-12);

  r = invoke({"lattice", "--v", "25", "--vprime", "0", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["ratio"].get<double>(), 1.0);

  r = invoke({"lattice", "--v", "25", "--solve-ratio", "0.001", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["vprime"].get<double>(), 17.5, 0.5);
  EXPECT_NEAR(j["ratio"].get<double>() / 0.001, 1.0, 1e-6);
}

TEST(LatticeCommand, TimingAndReadout) {
  const auto r = invoke({"lattice", "--v", "25", "--vprime", "17.5", "--dt0", "0.2", "--omega-t", "60000",
                         "--site", "-3", "--lambda", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::map<std::string, double> values;
  for (const auto& row : parse_csv(r.out)) {
    if (row[0] != "key") values[row[0]] = std::stod(row[1]);
  }
  EXPECT_NEAR(values["theta"], 1.5707963267948966 + 0.1, 1e-10);
  EXPECT_NEAR(values["adiabatic_time_us"], 16.6667, 1e-4);
  EXPECT_EQ(values["measurement_offset"], -1.5);
  EXPECT_EQ(values["v_min"], 7.5);
}

TEST(LatticeCommand, DomainErrors) {
  EXPECT_EQ(invoke({"lattice", "--v", "10", "--vprime", "12"}).code, kExitUsage);
  EXPECT_EQ(invoke({"lattice", "--v", "10", "--vprime", "-1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"lattice", "--v", "25", "--solve-ratio", "5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"lattice", "--v", "25", "--vprime", "1", "--solve-ratio", "0.1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"lattice", "--omega-t", "0"}).code, kExitUsage);
}
