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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using fairlip::cli::CommandOptions;

void add_kind(CLI::App* cmd, CommandOptions& o) {
  static const std::map<std::string, fairlip::ProbMetricKind> kinds = {
      {"tv", fairlip::ProbMetricKind::kTotalVariation},
      {"inf", fairlip::ProbMetricKind::kRelativeLinf}};
  cmd->add_option("--kind", o.kind, "Distance on outcome distributions: tv or inf")
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair classification under Lipschitz constraints"};
  app.require_subcommand(1);
  CommandOptions o;
  o.tol = fairlip::cli::tolerance_from_env();

  auto* solve = app.add_subcommand("solve", "Solve the fairness LP for an instance");
  auto* bias = app.add_subcommand("bias", "Bias between two groups");
  auto* em = app.add_subcommand("em", "Earthmover distance between two groups");
  auto* aa = app.add_subcommand("aa", "Fair affirmative action");
  auto* expmech = app.add_subcommand("expmech", "Exponential mechanism over the metric");
  auto* check = app.add_subcommand("check", "Check a mapping file against an instance");

  for (auto* cmd : {solve, bias, em, aa, expmech, check}) {
    cmd->add_option("instance", o.instance, "Instance JSON file")->required();
  }
  check->add_option("mapping", o.mapping, "Mapping JSON file")->required();
  for (auto* cmd : {solve, bias, aa, check}) add_kind(cmd, o);
  for (auto* cmd : {solve, bias, em, aa, expmech}) {
    cmd->add_option("--out", o.out, "Write the result as JSON");
  }
  for (auto* cmd : {bias, em}) {
    cmd->add_option("--s", o.s, "First group")->required();
    cmd->add_option("--t", o.t, "Second group")->required();
  }
  aa->add_option("--s", o.s, "Protected group (default: complement of T)");
  aa->add_option("--t", o.t, "Other group")->required();
  aa->add_option("--epsilon", o.epsilon, "Parity bound")->required();
  aa->add_flag("!--no-reweight", o.reweight, "Keep the original loss on T");
  expmech->add_option("--scale", o.scale, "Scale factor beta");
  em->add_option("--form", o.form, "LP form: general or metric")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, fairlip::EarthmoverForm>{
              {"general", fairlip::EarthmoverForm::kGeneral},
              {"metric", fairlip::EarthmoverForm::kMetricSimplified}},
          CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fairlip::cli::kExitInput;
  }

  using namespace fairlip::cli;
  if (*solve) return cmd_solve(o, std::cout, std::cerr);
  if (*bias) return cmd_bias(o, std::cout, std::cerr);
  if (*em) return cmd_em(o, std::cout, std::cerr);
  if (*aa) return cmd_aa(o, std::cout, std::cerr);
  if (*expmech) return cmd_expmech(o, std::cout, std::cerr);
  return cmd_check(o, std::cout, std::cerr);
}
