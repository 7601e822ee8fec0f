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

#include "fairlip/fairness_lp.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "fairlip/error.hpp"
#include "lipschitz_encoding.hpp"

namespace fairlip {

namespace {

IndexSet all_individuals(std::size_t n) {
  IndexSet all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return all;
}

}  // namespace

lp::LinearProgram build_fairness_lp(const FairnessInstance& inst,
                                    ProbMetricKind kind) {
  const std::size_t n = inst.individuals();
  const std::size_t k = inst.outcome_count();
  lp::LinearProgram program;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t a = 0; a < k; ++a) {
      program.add_variable(inst.base()[x] * inst.loss()(x, a));
    }
  }
  const IndexSet all = all_individuals(n);
  detail::LipschitzEncoding lipschitz(inst.space(), all, k, kind);
  lipschitz.add_variables(program);

  std::vector<std::pair<std::size_t, double>> simplex(k);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t a = 0; a < k; ++a) simplex[a] = {x * k + a, 1.0};
    program.add_constraint(simplex, lp::Relation::kEqual, 1.0);
  }
  lipschitz.add_constraints(
      program, [k](std::size_t x, std::size_t a) { return x * k + a; });
  return program;
}

double expected_loss(const FairnessInstance& inst, const StochasticMap& m) {
  if (m.size() != inst.individuals() || m.outcomes() != inst.outcome_count()) {
    throw InvalidArgument("expected_loss: map shape does not match instance");
  }
  double total = 0.0;
  for (std::size_t x = 0; x < m.size(); ++x) {
    const double w = inst.base()[x];
    if (w == 0.0) continue;
    auto row = m.row(x);
    double inner = 0.0;
    for (std::size_t a = 0; a < row.size(); ++a) inner += row[a] * inst.loss()(x, a);
    total += w * inner;
  }
  return total;
}

FairSolution solve_fairness(const FairnessInstance& inst, ProbMetricKind kind) {
  const lp::LinearProgram program = build_fairness_lp(inst, kind);
  const lp::LpSolution sol = lp::solve(program);
  if (sol.status != lp::Status::kOptimal) {
    // Constant maps are always feasible and the simplex rows bound every
    // variable, so anything but optimal is a solver failure.
    throw InternalError(std::string("fairness LP reported ") +
                        lp::to_string(sol.status));
  }
  StochasticMap map(detail::clean_rows(sol.values, inst.individuals(),
                                       inst.outcome_count()));
  const double value = expected_loss(inst, map);
  const double scale = 1.0 + std::abs(value);
  if (std::abs(value - sol.objective_value) > 1e-7 * scale) {
    throw InternalError("fairness LP objective " +
                        std::to_string(sol.objective_value) +
                        " disagrees with recomputed loss " + std::to_string(value));
  }
  return FairSolution{std::move(map), value};
}

}  // namespace fairlip
