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

#include "fairlip/affirmative.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "fairlip/error.hpp"
#include "fairlip/fairness_lp.hpp"
#include "fairlip/lp.hpp"
#include "fairlip/prob_metrics.hpp"
#include "lipschitz_encoding.hpp"

namespace fairlip {

using lp::Relation;

namespace {

void check_groups(std::size_t n, std::span<const std::size_t> s,
                  std::span<const std::size_t> t) {
  if (t.empty()) throw InvalidArgument("affirmative action: T is empty");
  std::vector<int> owner(n, 0);
  for (std::size_t x : s) {
    if (x >= n) throw InvalidArgument("affirmative action: S index out of range");
    if (owner[x]++) throw InvalidArgument("affirmative action: duplicate in S");
  }
  for (std::size_t y : t) {
    if (y >= n) throw InvalidArgument("affirmative action: T index out of range");
    if (owner[y]++) {
      throw InvalidArgument("affirmative action: S and T must be disjoint");
    }
  }
}

// Restricted transport program. Variables: mu_x(y) for (x, y) in S x T, then
// the Lipschitz auxiliaries, then q+/q- with mu_S(y) - 1/|T| = q+(y) - q-(y).
// With `budget` the parity row 1/2 sum (q+ + q-) <= budget is added and the
// objective is transport cost; without it the objective is the parity slack.
struct EmPlusL {
  lp::LinearProgram program;
  std::size_t parity_vars;
};

EmPlusL build_em_plus_l(const MetricSpace& space, std::span<const std::size_t> s,
                        std::span<const std::size_t> t,
                        std::optional<double> budget, ProbMetricKind kind) {
  const std::size_t ns = s.size();
  const std::size_t nt = t.size();
  const double inv_s = 1.0 / static_cast<double>(ns);
  const double inv_t = 1.0 / static_cast<double>(nt);
  EmPlusL out;
  lp::LinearProgram& program = out.program;
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      program.add_variable(budget ? inv_s * space(s[i], t[j]) : 0.0);
    }
  }
  detail::LipschitzEncoding lipschitz(space, s, nt, kind);
  lipschitz.add_variables(program);
  out.parity_vars = program.variable_count();
  for (std::size_t j = 0; j < 2 * nt; ++j) {
    program.add_variable(budget ? 0.0 : 0.5);
  }

  std::vector<std::pair<std::size_t, double>> terms;
  for (std::size_t i = 0; i < ns; ++i) {
    terms.clear();
    for (std::size_t j = 0; j < nt; ++j) terms.emplace_back(i * nt + j, 1.0);
    program.add_constraint(terms, Relation::kEqual, 1.0);
  }
  lipschitz.add_constraints(
      program, [nt](std::size_t i, std::size_t j) { return i * nt + j; });
  std::vector<std::pair<std::size_t, double>> slack;
  for (std::size_t j = 0; j < nt; ++j) {
    terms.clear();
    for (std::size_t i = 0; i < ns; ++i) terms.emplace_back(i * nt + j, inv_s);
    const std::size_t pos = out.parity_vars + 2 * j;
    terms.emplace_back(pos, -1.0);
    terms.emplace_back(pos + 1, 1.0);
    program.add_constraint(terms, Relation::kEqual, inv_t);
    slack.emplace_back(pos, 0.5);
    slack.emplace_back(pos + 1, 0.5);
  }
  if (budget) program.add_constraint(slack, Relation::kLessEqual, *budget);
  return out;
}

}  // namespace

AaPlan solve_em_plus_l(const MetricSpace& space, std::span<const std::size_t> s,
                       std::span<const std::size_t> t, double eps,
                       ProbMetricKind kind) {
  check_groups(space.size(), s, t);
  if (!std::isfinite(eps)) throw InvalidArgument("solve_em_plus_l: eps not finite");
  const std::size_t ns = s.size();
  const std::size_t nt = t.size();
  if (ns == 0) {
    if (eps < 0.0) throw InfeasibleParity(eps, 0.0);
    return AaPlan{StochasticMap(Matrix(0, nt)), 0.0, eps, kind};
  }

  const EmPlusL em = build_em_plus_l(space, s, t, eps, kind);
  const lp::LpSolution sol = lp::solve(em.program);
  if (sol.status == lp::Status::kInfeasible) {
    const EmPlusL relaxed = build_em_plus_l(space, s, t, std::nullopt, kind);
    const lp::LpSolution min_slack = lp::solve(relaxed.program);
    if (min_slack.status != lp::Status::kOptimal) {
      throw InternalError("solve_em_plus_l: parity-slack program not solvable");
    }
    throw InfeasibleParity(eps, std::max(min_slack.objective_value, 0.0));
  }
  if (sol.status != lp::Status::kOptimal) {
    throw InternalError(std::string("solve_em_plus_l: solver reported ") +
                        lp::to_string(sol.status));
  }
  StochasticMap assignment(detail::clean_rows(sol.values, ns, nt));
  double cost = 0.0;
  for (std::size_t i = 0; i < ns; ++i) {
    auto row = assignment.row(i);
    for (std::size_t j = 0; j < nt; ++j) cost += row[j] * space(s[i], t[j]);
  }
  return AaPlan{std::move(assignment), cost / static_cast<double>(ns), eps, kind};
}

Matrix reweight_loss(const AaPlan& plan, const FairnessInstance& inst,
                     std::span<const std::size_t> s,
                     std::span<const std::size_t> t, bool reweight) {
  if (plan.assignment.size() != s.size() ||
      (!s.empty() && plan.assignment.outcomes() != t.size())) {
    throw InvalidArgument("reweight_loss: plan does not match S x T");
  }
  const std::size_t k = inst.outcome_count();
  Matrix out(t.size(), k);
  for (std::size_t j = 0; j < t.size(); ++j) {
    for (std::size_t a = 0; a < k; ++a) out(j, a) = inst.loss()(t[j], a);
  }
  if (!reweight) return out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto row = plan.assignment.row(i);
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (row[j] == 0.0) continue;
      for (std::size_t a = 0; a < k; ++a) out(j, a) += row[j] * inst.loss()(s[i], a);
    }
  }
  return out;
}

ComposedMap run_affirmative_action(const FairnessInstance& inst,
                                   std::span<const std::size_t> s,
                                   std::span<const std::size_t> t, double eps,
                                   const AaOptions& options) {
  const std::size_t n = inst.individuals();
  check_groups(n, s, t);
  if (s.size() + t.size() != n) {
    throw InvalidArgument("affirmative action: S and T must cover every individual");
  }
  AaPlan plan = solve_em_plus_l(inst.space(), s, t, eps, options.kind);
  Matrix reweighted = reweight_loss(plan, inst, s, t, options.reweight);
  const FairnessInstance on_t(inst.space().subspace(t), inst.outcomes(),
                              std::move(reweighted));
  FairSolution inner = solve_fairness(on_t, options.kind);

  const std::size_t k = inst.outcome_count();
  Matrix rows(n, k, 0.0);
  for (std::size_t j = 0; j < t.size(); ++j) {
    auto src = inner.map.row(j);
    std::copy(src.begin(), src.end(), rows.row(t[j]).begin());
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto weights = plan.assignment.row(i);
    auto dst = rows.row(s[i]);
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (weights[j] == 0.0) continue;
      auto nu = inner.map.row(j);
      for (std::size_t a = 0; a < k; ++a) dst[a] += weights[j] * nu[a];
    }
  }
  return ComposedMap{StochasticMap(std::move(rows)), std::move(inner.map),
                     std::move(plan)};
}

ComposedReport evaluate_composed(const ComposedMap& composed,
                                 const MetricSpace& space,
                                 std::span<const std::size_t> s,
                                 std::span<const std::size_t> t, double tol) {
  const std::size_t n = space.size();
  check_groups(n, s, t);
  const StochasticMap& m = composed.map;
  ComposedReport r{};

  if (s.empty()) {
    r.parity_gap = 0.0;
  } else {
    r.parity_gap = tv_distance(group_mixture(m, GroupDistribution::uniform_over(n, s)),
                               group_mixture(m, GroupDistribution::uniform_over(n, t)));
  }
  r.parity_ok = r.parity_gap <= composed.plan.eps + tol;

  const ProbMetricKind kind = composed.plan.kind;
  const LipschitzReport in_s = check_lipschitz_within(m, space, s, kind, tol);
  const LipschitzReport in_t = check_lipschitz_within(m, space, t, kind, tol);
  r.within_s_violation = in_s.worst_pair ? in_s.max_violation : 0.0;
  r.within_t_violation = in_t.worst_pair ? in_t.max_violation : 0.0;
  r.lipschitz_ok = in_s.lipschitz && in_t.lipschitz;

  double total = 0.0;
  for (std::size_t x : s) {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t y : t) {
      worst = std::max(worst, tv_distance(m.row(x), m.row(y)) - space(x, y));
    }
    total += worst;
  }
  r.cross_average_violation = s.empty() ? 0.0 : total / static_cast<double>(s.size());
  r.cross_bound_ok = r.cross_average_violation <= composed.plan.em_cost + tol;
  return r;
}

}  // namespace fairlip
