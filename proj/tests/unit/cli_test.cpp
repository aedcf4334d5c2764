// Copyright 2026 The ghzsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace ghzsim::cli {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ghzsim");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ghzsim_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(CliTest, EnumerateReportsTheCount) {
  const auto r = run({"enumerate", "--n", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "384");
}

TEST_F(CliTest, UsageErrorsExitWithTwo) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"enumerate"}).code, kExitUsage);
  EXPECT_EQ(run({"enumerate", "--n", "9"}).code, kExitUsage);
  EXPECT_EQ(run({"enumerate", "--n", "4", "--brute-force-converse"}).code, kExitUsage);
  EXPECT_EQ(run({"baseline", "--protocol", "pumping", "--p", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"replay", (dir_ / "missing.json").string()}).code, kExitUsage);
}

TEST_F(CliTest, MalformedCircuitExitsWithTwo) {
  const auto path = dir_ / "bad.json";
  std::ofstream(path) << R"({"version":1,"n":3,"N":2,"K":1,"R":2,"elements":[{"kind":"H","gate":"XX","a":0,"b":1}]})";
  const auto r = run({"simulate", "--circuit", path.string(), "--samples", "100"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("element 0"), std::string::npos) << r.err;

  std::ofstream(path) << R"({"version":1,"n":3,"N":2,"K":1,"R":2,"elements":[{"kind":"Measure","copy":0,"basis":"Z"},{"kind":"Measure","copy":0,"basis":"Z"}]})";
  EXPECT_EQ(run({"simulate", "--circuit", path.string()}).code, kExitUsage);
}

TEST_F(CliTest, BaselineSweepWritesFortyRows) {
  const auto csv = dir_ / "pump.csv";
  const auto r = run({"baseline", "--protocol", "pumping", "--rounds", "2", "--samples", "2e3",
                      "--p", "0.01", "--eta", "0.01", "--output", csv.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(csv);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 41);
  EXPECT_TRUE(fs::exists(csv.string() + ".manifest.json"));
}

TEST_F(CliTest, ReplayIsBitIdenticalAcrossThreadCounts) {
  const auto csv = dir_ / "seq.csv";
  ASSERT_EQ(run({"baseline", "--protocol", "sequence", "--bases", "ZXZ", "--f-in", "0.8", "0.9",
                 "--samples", "20000", "--seed", "77", "--threads", "1", "--output", csv.string()})
                .code,
            kExitOk);
  const auto manifest = csv.string() + ".manifest.json";
  const auto replay_dir = dir_ / "replay";
  const auto r = run({"replay", manifest, "--threads", "3", "--output-dir", replay_dir.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(slurp(csv), slurp(replay_dir / "seq.csv"));
}

TEST_F(CliTest, ZeroGenerationOptimizeManifest) {
  auto m = showcase_manifest(5);
  m["ga"]["generations"] = 0;
  m["ga"]["population"] = 8;
  m["ga"]["final_pool"] = 2;
  m["outputs"] = {{"circuit", (dir_ / "opt.circuit.json").string()}};
  std::ostringstream out, err;
  const int code = run_manifest(m, RunOptions{1, std::nullopt}, out, err);
  EXPECT_EQ(code, kExitOk) << err.str();
  EXPECT_TRUE(fs::exists(dir_ / "opt.circuit.json"));
  EXPECT_NE(out.str().find("reference pumping(rounds=4)"), std::string::npos) << out.str();
}

TEST_F(CliTest, ConvertTriangle) {
  const auto graph = dir_ / "tri.txt";
  std::ofstream(graph) << "1 2\n2 3\n1 3\n";
  const auto r = run({"convert", "--graph", graph.string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "LC at 1; H at 2,3; verified\n");
  std::ofstream(graph) << "1 2\n3 4\n";
  EXPECT_EQ(run({"convert", "--graph", graph.string()}).code, kExitCheckFailed);
}

TEST_F(CliTest, ConverseFailureIsACheckFailure) {
  const auto r = run({"enumerate", "--n", "2", "--brute-force-converse"});
  EXPECT_EQ(r.code, kExitCheckFailed);
}

TEST_F(CliTest, UnknownManifestVersion) {
  std::ostringstream out, err;
  EXPECT_EQ(run_manifest(nlohmann::json{{"version", 9}, {"command", "enumerate"}}, {}, out, err),
            kExitUsage);
  EXPECT_EQ(run_manifest(nlohmann::json{{"command", "dance"}}, {}, out, err), kExitUsage);
}

}  // namespace
}  // namespace ghzsim::cli
