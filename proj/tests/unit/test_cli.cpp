// Copyright 2026 The GibbsGame Authors
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

#include <cstdio>
#include <sstream>

#include "cli.hpp"
#include "gibbsgame/io.hpp"
#include "json.hpp"

namespace gibbsgame {
namespace {

using Json = nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gibbsgame");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(GIBBSGAME_FIXTURES_DIR) + "/" + name;
}

std::string tmp(const std::string& name) {
  return std::string(GIBBSGAME_TEST_TMP) + "/" + name;
}

TEST(Cli, AnalyzeCoordination) {
  const Result r = run_cli({"analyze", fixture("coordination.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["potential"]["exact"]["found"].get<bool>());
  EXPECT_TRUE(j["decomposition"]["gibbs"].get<bool>());
  ASSERT_EQ(j["decomposition"]["cliques"].size(), 1u);
  EXPECT_EQ(j["decomposition"]["cliques"][0]["scope"], Json::parse("[0,1]"));
  EXPECT_EQ(j["equilibria"]["pne"], Json::parse("[[0,0],[1,1]]"));
  EXPECT_EQ(j["potential"]["tolerance"].get<double>(), 1e-9);
  EXPECT_EQ(j["decomposition"]["tolerance"].get<double>(), 1e-9);
  EXPECT_EQ(j["equilibria"]["tolerance"].get<double>(), 1e-9);
  EXPECT_TRUE(j["provenance"].contains("generated_at"));
}

TEST(Cli, AnalyzeMatchingPennies) {
  const Result r = run_cli({"analyze", fixture("matching_pennies.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_FALSE(j["potential"]["exact"]["found"].get<bool>());
  EXPECT_FALSE(j["potential"]["ordinal"]["found"].get<bool>());
  EXPECT_TRUE(j["equilibria"]["pne"].empty());
  EXPECT_TRUE(j["decomposition"].is_null());
}

TEST(Cli, AnalyzeWeightsAndHypergraphical) {
  const Result r = run_cli({"analyze", fixture("products_hypergraphical.json"),
                            "--weights", "1,2,1", "--tolerance", "1e-8"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["game"]["kind"], "hypergraphical");
  EXPECT_EQ(j["potential"]["weighted"]["weights"], Json::parse("[1.0,2.0,1.0]"));
  EXPECT_EQ(j["potential"]["tolerance"].get<double>(), 1e-8);
}

TEST(Cli, MalformedFileIsParseError) {
  write_text_file(tmp("missing_table.json"),
                  R"({"format_version": 1, "kind": "graphical", "n": 2,
    "actions": [2, 2], "edges": [[0, 1]],
    "payoffs": [{"player": 0, "scope": [0, 1], "table": [1, 0, 0, 1]}]})");
  const Result r = run_cli({"analyze", tmp("missing_table.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("(player 1, scope [0,1])"), std::string::npos) << r.err;
  EXPECT_EQ(run_cli({"analyze", tmp("does_not_exist.json")}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"bogus"}).code, 1);
  EXPECT_EQ(run_cli({"analyze"}).code, 1);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  EXPECT_EQ(run_cli({"simulate", fixture("coordination.json"), "--rounds", "0"}).code, 1);
  EXPECT_EQ(run_cli({"analyze", fixture("coordination.json"), "--weights", "1,x"}).code, 1);
}

TEST(Cli, ValidationErrors) {
  EXPECT_EQ(run_cli({"simulate", fixture("coordination.json"), "--init", "0,2"}).code, 2);
  EXPECT_EQ(run_cli({"simulate", fixture("coordination.json"), "--init", "0"}).code, 2);
  EXPECT_EQ(run_cli({"analyze", fixture("coordination.json"), "--weights", "1,-1"}).code, 2);
  EXPECT_EQ(run_cli({"analyze", fixture("coordination.json"), "--weights", "1,1,1"}).code, 2);
}

TEST(Cli, SimulateCoordination) {
  const Result r = run_cli({"simulate", fixture("coordination.json"), "--rounds", "200000",
                            "--seed", "1", "--trace", tmp("coord_trace.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_LE(j["dynamics"]["tv_empirical_stationary"].get<double>(), 0.02);
  EXPECT_LE(j["dynamics"]["tv_empirical_gibbs"].get<double>(), 0.02);
  const auto& counts = j["dynamics"]["empirical"];
  const double agree = (counts[0].get<double>() + counts[3].get<double>()) / 200000.0;
  EXPECT_NEAR(agree, 0.731, 0.02);
  const std::string trace = read_text_file(tmp("coord_trace.txt"));
  EXPECT_EQ(std::count(trace.begin(), trace.end(), '\n'), 200001);
}

TEST(Cli, ConsistencyReports) {
  Result r = run_cli({"consistency", fixture("coordination.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_TRUE(j["dynamics"]["consistent"].get<bool>());
  EXPECT_TRUE(j["decomposition"]["gibbs"].get<bool>());

  r = run_cli({"consistency", fixture("random_scheme.json"), "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = Json::parse(r.out);
  EXPECT_FALSE(j["dynamics"]["consistent"].get<bool>());
  EXPECT_TRUE(j["dynamics"].contains("mismatch_state"));
  EXPECT_TRUE(j["decomposition"].is_null());

  r = run_cli({"consistency", fixture("single_player_scheme.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["dynamics"]["consistent"].get<bool>());
}

TEST(Cli, Construct) {
  Result r = run_cli({"construct", fixture("path_potential.json"), "--pairwise"});
  ASSERT_EQ(r.code, 0) << r.err;
  const AnyGame g = parse_game(r.out);
  ASSERT_TRUE(std::holds_alternative<HypergraphicalGame>(g));
  const HypergraphicalGame& hg = std::get<HypergraphicalGame>(g);
  EXPECT_TRUE(is_pairwise_symmetric(hg));
  const GibbsPotential gp = parse_potential(read_text_file(fixture("path_potential.json")));
  EXPECT_EQ(r.out, serialize(symmetric_hypergraphical_from_potential(
                       gp, std::vector<double>{1, 1, 1})));

  EXPECT_EQ(run_cli({"construct", fixture("triangle_potential.json"), "--pairwise"}).code, 3);

  r = run_cli({"construct", fixture("triangle_potential.json"), "-o", tmp("tri_game.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const AnyGame tri = parse_game(read_text_file(tmp("tri_game.json")));
  ASSERT_TRUE(std::holds_alternative<HypergraphicalGame>(tri));
  EXPECT_EQ(std::get<HypergraphicalGame>(tri).hypergraph().hyperedges().size(), 1u);
  EXPECT_EQ(run_cli({"construct", fixture("coordination.json")}).code, 2);
}

TEST(Cli, ResourceCapIsExitFour) {
  set_joint_action_cap(3);
  const Result r = run_cli({"analyze", fixture("coordination.json")});
  set_joint_action_cap(std::nullopt);
  EXPECT_EQ(r.code, 4) << r.err;
}

TEST(Cli, EnvironmentCapOverride) {
  const std::string cmd = std::string("GIBBSGAME_CAP=3 '") + GIBBSGAME_CLI_PATH +
                          "' analyze '" + fixture("coordination.json") + "' >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), 4);
  const std::string ok = std::string("GIBBSGAME_CAP=4 '") + GIBBSGAME_CLI_PATH +
                         "' analyze '" + fixture("coordination.json") + "' >/dev/null 2>&1";
  EXPECT_EQ(std::system(ok.c_str()), 0);
}

}  // namespace
}  // namespace gibbsgame
