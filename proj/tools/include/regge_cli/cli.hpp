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

#ifndef REGGE_CLI_CLI_HPP_
#define REGGE_CLI_CLI_HPP_

#include <array>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "regge/tetrahedron.hpp"

namespace regge::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitInput = 1,
  kExitVerification = 2,
  kExitNumerical = 3,
};

// Malformed or out-of-domain input; `field` names the offending angle or
// option when there is one.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& field, const std::string& what)
      : std::runtime_error(what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Parses "A,B,C,A',B',C'". Degrees are converted on ingest. Every value
/// must lie in (0, pi) after conversion. Throws InputError naming the field.
TetAngles parse_angles(const std::string& text, bool degrees);

// {"value": v, "tolerance": t}: every real in a report carries its
// tolerance; inputs carry 0.
nlohmann::json measured(double value, double tolerance);

// Flattened "path  value" lines for --format table.
std::string render_table(const nlohmann::json& report);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Reports go to `out`, diagnostics and timings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace regge::cli

#endif  // REGGE_CLI_CLI_HPP_
