// Copyright 2026 The coopeq Authors
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

#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "coopeq/report.hpp"
#include "json.hpp"

namespace coopeq::cli {
namespace {

const std::string kRoot = COOPEQ_SOURCE_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "coopeq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& part) {
  return text.find(part) != std::string::npos;
}

TEST(CliTest, SolvePdVariant) {
  const Outcome r = invoke({"solve", kRoot + "/games/pd_variant.json", "--agg", "linear"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "p* = {1,2}"));
  EXPECT_TRUE(contains(r.out, "(C,C)"));
}

TEST(CliTest, SolveUltimatum) {
  const Outcome r = invoke({"solve", kRoot + "/games/ug40.json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "(10,Accept)"));
}

TEST(CliTest, MalformedGameIsInputError) {
  EXPECT_EQ(invoke({"solve", kRoot + "/tests/data/bad_game.json"}).code,
            kExitInput);
  EXPECT_EQ(invoke({"solve", kRoot + "/no/such/file.json"}).code, kExitInput);
  EXPECT_EQ(invoke({"solve", kRoot + "/games/matching_pennies.json"}).code,
            kExitInput);
}

TEST(CliTest, ValidateReportsOk) {
  EXPECT_EQ(invoke({"validate", kRoot + "/games/coordination.json"}).code,
            kExitOk);
}

TEST(CliTest, SolveJsonRoundTrips) {
  const std::string path = ::testing::TempDir() + "coopeq_report.json";
  const Outcome r = invoke({"--json", "--out", path, "solve",
                        kRoot + "/games/pd_variant.json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto printed = nlohmann::json::parse(r.out);
  std::ifstream file(path);
  const auto written = nlohmann::json::parse(file);
  EXPECT_EQ(printed, written);
  const SolveReport report = solve_report_from_json(printed);
  EXPECT_EQ(to_json(report), printed);
  ASSERT_TRUE(report.p_star);
  EXPECT_EQ(report.p_star->label, "{1,2}");
  std::remove(path.c_str());
}

TEST(CliTest, SolveIsDeterministic) {
  const auto a = invoke({"solve", kRoot + "/games/nbp_grid.json", "--purify", "20"});
  const auto b = invoke({"solve", kRoot + "/games/nbp_grid.json", "--purify", "20"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliTest, Ultimatum) {
  EXPECT_TRUE(contains(invoke({"ug", "--budget", "40"}).out, "offer = 10\n"));
  EXPECT_TRUE(contains(invoke({"ug", "--budget", "40", "--donation", "10"}).out,
                       "with donation 10 = 20"));
  EXPECT_TRUE(contains(invoke({"ug", "--budget", "40", "--tau", "1"}).out,
                       "offer = 20\n"));
}

TEST(CliTest, Bargaining) {
  EXPECT_TRUE(contains(invoke({"nbp", "--budget", "1"}).out, "(0.5, 0.5)"));
  EXPECT_TRUE(contains(invoke({"nbp"}).out, "(0.5, 0.5)"));
  EXPECT_TRUE(contains(invoke({"ug"}).out, "b_D = 30"));
  EXPECT_TRUE(contains(
      invoke({"nbp", "--budget", "100", "--agg-proposer", "scaled:0.5"}).out,
      "(66.6667, 33.3333)"));
  EXPECT_EQ(invoke({"nbp", "--budget", "0"}).code, kExitInput);
}

TEST(CliTest, InequityRows) {
  const Outcome r = invoke({"fs", "--budget", "40"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "17.7778"));
  const auto doc = nlohmann::json::parse(invoke({"--json", "fs", "--budget", "80"}).out);
  EXPECT_EQ(doc["rows"][1]["alpha"], 0.5);
  EXPECT_EQ(doc["rows"][1]["offer"], 20.0);
}

TEST(CliTest, Stats) {
  const Outcome r = invoke({"stats", kRoot + "/tests/data/cohort.csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "treatment 1 (removed 43)"));
  EXPECT_TRUE(contains(r.out, "filtered  n=57"));
  EXPECT_TRUE(contains(r.out, "rho=1 "));
  EXPECT_FALSE(contains(r.out, "not verified"));
  const Outcome compare =
      invoke({"stats", kRoot + "/tests/data/cohort.csv", "--compare-paper"});
  EXPECT_TRUE(contains(compare.out, "paper-reported (not verified)"));
  EXPECT_TRUE(contains(compare.out, "rho=0.3412"));
  EXPECT_EQ(invoke({"stats", kRoot + "/tests/data/bad_header.csv"}).code,
            kExitInput);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitInput);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitInput);
  EXPECT_EQ(invoke({"ug", "--budget", "abc"}).code, kExitInput);
}

}  // namespace
}  // namespace coopeq::cli
