//
// Copyright 2026 The fairlip Authors
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
//

#ifndef FAIRLIP_TOOLS_COMMANDS_HPP_
#define FAIRLIP_TOOLS_COMMANDS_HPP_

#include <iosfwd>
#include <optional>
#include <string>

#include "fairlip/parity.hpp"
#include "fairlip/types.hpp"

namespace fairlip::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,  // cmd_check found a Lipschitz violation
  kExitInput = 2,
  kExitInternal = 3,
};

struct CommandOptions {
  std::string instance;
  std::string mapping;  // cmd_check only
  ProbMetricKind kind = ProbMetricKind::kTotalVariation;
  std::optional<std::string> out;
  std::optional<std::string> s;
  std::optional<std::string> t;
  double epsilon = 0.0;
  double scale = 1.0;
  EarthmoverForm form = EarthmoverForm::kGeneral;
  bool reweight = true;
  double tol = kLipschitzTol;
};

// Each command writes report lines to `out`, diagnostics to `err`, and maps
// library errors onto the exit-code contract.
int cmd_solve(const CommandOptions& o, std::ostream& out, std::ostream& err);
int cmd_bias(const CommandOptions& o, std::ostream& out, std::ostream& err);
int cmd_em(const CommandOptions& o, std::ostream& out, std::ostream& err);
int cmd_aa(const CommandOptions& o, std::ostream& out, std::ostream& err);
int cmd_expmech(const CommandOptions& o, std::ostream& out, std::ostream& err);
int cmd_check(const CommandOptions& o, std::ostream& out, std::ostream& err);

// FAIRLIP_TOL if set and parseable as a positive number, else `fallback`.
double tolerance_from_env(double fallback = kLipschitzTol);

}  // namespace fairlip::cli

#endif  // FAIRLIP_TOOLS_COMMANDS_HPP_
