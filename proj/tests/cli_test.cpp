// Copyright 2026 The regge-scissors Authors.
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

#include "regge_cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "regge_cli/suite.hpp"

namespace regge::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, VolumeReportsEveryFieldWithTolerance) {
  const Outcome r = Invoke({"volume", "--equiangular", "1.2"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["classification"]["kind"], "Finite");
  EXPECT_NEAR(j["volume"]["value"].get<double>(), 0.0467128620, 1e-9);
  EXPECT_EQ(j["volume"]["tolerance"].get<double>(), 1e-9);
  EXPECT_TRUE(j["holonomy"]["Z_minus"].contains("tolerance"));
}

TEST(Cli, HyperidealVolumeIsInputError) {
  const Outcome r = Invoke({"volume", "--equiangular", "1.0"});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("Hyperideal"), std::string::npos);
}

TEST(Cli, NamesOffendingField) {
  Outcome r = Invoke({"volume", "--angles", "1.1,1.2,oops,1,1,1"});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("[C]"), std::string::npos) << r.err;
  r = Invoke({"volume", "--angles", "1.1,1.2,1.3,1,4.0,1"});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("[B']"), std::string::npos) << r.err;
  r = Invoke({"volume", "--angles", "1.1,1.2,1.3"});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("[A']"), std::string::npos) << r.err;
  r = Invoke({"regge", "--equiangular", "1.2", "--which", "q"});
  EXPECT_EQ(r.code, kExitInput);
  r = Invoke({"bogus"});
  EXPECT_EQ(r.code, kExitInput);
}

TEST(Cli, ParseAnglesDegrees) {
  const TetAngles t = parse_angles("60, 60,60,60,60,90", true);
  EXPECT_NEAR(t.A, 1.0471975511965976, 1e-15);
  EXPECT_NEAR(t.Cp, 1.5707963267948966, 1e-15);
  EXPECT_THROW(parse_angles("60,60,60,60,60,180", true), InputError);
  EXPECT_THROW(parse_angles("1,1,1,1,1,1,1", false), InputError);
}

TEST(Cli, VerifyFixedPointPasses) {
  const Outcome r = Invoke({"verify", "--which", "a", "--angles", "1.1,1.2,1.2,1.3,1.2,1.2"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_LT(j["volume_gap"]["value"].get<double>(), 1e-15);
  EXPECT_LT(j["multiset_distance"]["value"].get<double>(), 1e-12);
}

TEST(Cli, VerifyFailureExitsTwo) {
  const Outcome r = Invoke({"verify", "--which", "b", "--angles",
                         "1.1,1.2,1.3,1.15,1.25,1.05", "--volume-tol", "-1"});
  EXPECT_EQ(r.code, kExitVerification);
  EXPECT_FALSE(nlohmann::json::parse(r.out)["pass"].get<bool>());
}

TEST(Cli, NumericalFailureExitsThree) {
  const Outcome r = Invoke({"oracle", "--equiangular", "1.2", "--tol", "1e-300"});
  EXPECT_EQ(r.code, kExitNumerical) << r.err;
}

TEST(Cli, DecomposeListsSixteenSlots) {
  const Outcome r = Invoke({"decompose", "--equiangular", "1.2"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["pieces"].size(), 16u);
  EXPECT_EQ(j["pieces"][0]["slot"], "AB/O");
  EXPECT_NEAR(j["sum"]["value"].get<double>(), j["twice_volume"]["value"].get<double>(),
              1e-10);
}

TEST(Cli, ReggeOrbitAndOracle) {
  Outcome r = Invoke({"regge", "--which", "c", "--angles", "1.1,1.2,1.3,1.15,1.25,1.05"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["image_volume"]["value"].get<double>(),
              j["input_volume"]["value"].get<double>(), 1e-9);
  r = Invoke({"orbit", "--equiangular", "1.2"});
  ASSERT_EQ(r.code, kExitPass);
  EXPECT_EQ(nlohmann::json::parse(r.out)["size"], 1);
  r = Invoke({"oracle", "--equiangular", "1.2", "--format", "table"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_NE(r.out.find("quadrature_volume"), std::string::npos);
}

TEST(Cli, OutFileMatchesStdout) {
  const std::string path = ::testing::TempDir() + "regge_cli_out.json";
  const Outcome r = Invoke({"volume", "--equiangular", "1.1", "--out", path});
  ASSERT_EQ(r.code, kExitPass);
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  EXPECT_EQ(buf.str(), r.out);
}

TEST(Cli, SuiteIsDeterministicAndHonoursEnvSeed) {
  const std::vector<std::string> args = {"suite", "--count", "5", "--oracle-count", "2",
                                         "--no-determinism"};
  std::vector<std::string> seeded = args;
  seeded.insert(seeded.end(), {"--seed", "7"});
  const Outcome a = Invoke(seeded), b = Invoke(seeded);
  ASSERT_EQ(a.code, kExitPass) << a.err;
  EXPECT_EQ(a.out, b.out);
  ::setenv("REGGE_SUITE_SEED", "7", 1);
  const Outcome env = Invoke(args);
  ::setenv("REGGE_SUITE_SEED", "8", 1);
  const Outcome other = Invoke(args);
  ::unsetenv("REGGE_SUITE_SEED");
  EXPECT_EQ(env.out, a.out);
  EXPECT_NE(other.out, a.out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["config"]["seed"], 7);
}

TEST(Suite, CriterionIdsAndTitles) {
  SuiteConfig c;
  c.count = 3;
  c.oracle_count = 1;
  for (int id = 1; id <= 8; ++id) {
    const CriterionResult r = run_criterion(id, c);
    EXPECT_EQ(r.id, id);
    EXPECT_TRUE(r.pass) << summary_line(r);
    EXPECT_FALSE(r.checks.empty());
  }
  EXPECT_EQ(criterion_title(9), "determinism");
}

}  // namespace
}  // namespace regge::cli
