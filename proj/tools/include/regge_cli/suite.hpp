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

#ifndef REGGE_CLI_SUITE_HPP_
#define REGGE_CLI_SUITE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace regge::cli {

struct SuiteConfig {
  int count = 100;        // tetrahedra per sampled criterion
  int oracle_count = 25;  // tetrahedra for the quadrature criterion
  std::uint64_t seed = 7;
  double box_lo = 1.0;
  double box_hi = 1.45;
  double quadrature_tol = 1e-6;
  double schlafli_h = 1e-5;
  bool check_determinism = true;  // criterion 9: rerun 1-8 in process
};

// One measured quantity: the worst value over all samples.
struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  int samples = 0;
  double acceptance_rate = 0.0;  // sampler acceptance, 0 when unsampled
  std::vector<Check> checks;
  std::vector<std::string> failures;  // exceptions caught on samples
  bool pass = false;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CriterionResult> criteria;
  bool pass = false;
};

inline constexpr int kCriteria = 9;

std::string criterion_title(int id);

// Criteria 1-8. Criterion 9 needs the whole suite and is run by run_suite.
CriterionResult run_criterion(int id, const SuiteConfig& config);
SuiteReport run_suite(const SuiteConfig& config);

nlohmann::json to_json(const CriterionResult& r);
nlohmann::json to_json(const SuiteReport& r);

// "criterion 3 PASS holonomy system (100 samples)" style lines.
std::string summary_line(const CriterionResult& r);

}  // namespace regge::cli

#endif  // REGGE_CLI_SUITE_HPP_
