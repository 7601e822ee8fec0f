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

#include "fairlip/parity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fairlip/error.hpp"
#include "fairlip/lp.hpp"
#include "fairlip/prob_metrics.hpp"

namespace fairlip {

using lp::Relation;

namespace {

void require_aligned(std::size_t n, const GroupDistribution& s,
                     const GroupDistribution& t, const char* what) {
  if (s.size() != n || t.size() != n) {
    throw InvalidArgument(std::string(what) + ": group weights cover " +
                          std::to_string(s.size()) + "/" +
                          std::to_string(t.size()) + " individuals, expected " +
                          std::to_string(n));
  }
}

lp::LpSolution solve_or_throw(const lp::LinearProgram& program, const char* what) {
  lp::LpSolution sol = lp::solve(program);
  if (sol.status != lp::Status::kOptimal) {
    throw InternalError(std::string(what) + ": solver reported " +
                        lp::to_string(sol.status));
  }
  return sol;
}

// Witness rows (u_x, 1 - u_x) with u snapped onto [0, 1].
BiasReport make_bias_report(std::span<const double> u, const GroupDistribution& s,
                            const GroupDistribution& t) {
  Matrix rows(u.size(), 2);
  double value = 0.0;
  for (std::size_t x = 0; x < u.size(); ++x) {
    double v = std::clamp(u[x], 0.0, 1.0);
    if (v < 1e-13) v = 0.0;
    if (v > 1.0 - 1e-13) v = 1.0;
    rows(x, 0) = v;
    rows(x, 1) = 1.0 - v;
    value += (s[x] - t[x]) * v;
  }
  return BiasReport{std::max(value, 0.0), StochasticMap(std::move(rows))};
}

}  // namespace

double parity_gap(const StochasticMap& m, const GroupDistribution& s,
                  const GroupDistribution& t) {
  return tv_distance(group_mixture(m, s), group_mixture(m, t));
}

ParityConsequences parity_consequences(const StochasticMap& m,
                                       const GroupDistribution& s,
                                       const GroupDistribution& t,
                                       std::span<const std::size_t> outcome_set,
                                       double prior_s) {
  if (!(prior_s >= 0.0 && prior_s <= 1.0)) {
    throw InvalidArgument("parity_consequences: prior must lie in [0, 1]");
  }
  std::vector<bool> in_set(m.outcomes(), false);
  for (std::size_t a : outcome_set) {
    if (a >= m.outcomes()) {
      throw InvalidArgument("parity_consequences: outcome index out of range");
    }
    in_set[a] = true;
  }
  const OutcomeDistribution mu_s = group_mixture(m, s);
  const OutcomeDistribution mu_t = group_mixture(m, t);
  double ps = 0.0;
  double pt = 0.0;
  for (std::size_t a = 0; a < m.outcomes(); ++a) {
    if (!in_set[a]) continue;
    ps += mu_s[a];
    pt += mu_t[a];
  }
  ParityConsequences out{std::abs(ps - pt), std::nullopt};
  const double joint_s = prior_s * ps;
  const double joint_t = (1.0 - prior_s) * pt;
  const double total = joint_s + joint_t;
  if (total > 0.0) out.membership_gap = std::abs(joint_s - joint_t) / total;
  return out;
}

IndexSet favored_outcomes(const StochasticMap& m, const GroupDistribution& s,
                          const GroupDistribution& t) {
  const OutcomeDistribution mu_s = group_mixture(m, s);
  const OutcomeDistribution mu_t = group_mixture(m, t);
  IndexSet favored;
  for (std::size_t a = 0; a < m.outcomes(); ++a) {
    if (mu_s[a] > mu_t[a]) favored.push_back(a);
  }
  return favored;
}

StochasticMap binarize(const StochasticMap& m, const GroupDistribution& s,
                       const GroupDistribution& t) {
  const IndexSet favored = favored_outcomes(m, s, t);
  Matrix channel(m.outcomes(), 2, 0.0);
  std::vector<bool> is_favored(m.outcomes(), false);
  for (std::size_t a : favored) is_favored[a] = true;
  for (std::size_t a = 0; a < m.outcomes(); ++a) channel(a, is_favored[a] ? 0 : 1) = 1.0;
  return postprocess(m, channel);
}

BiasReport bias_tv(const MetricSpace& space, const GroupDistribution& s,
                   const GroupDistribution& t) {
  const std::size_t n = space.size();
  require_aligned(n, s, t, "bias_tv");
  lp::LinearProgram program;
  for (std::size_t x = 0; x < n; ++x) {
    program.add_variable(-(s[x] - t[x]), {0.0, 1.0});
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const double d = space(x, y);
      if (d >= 1.0) continue;
      if (d == 0.0) {
        program.add_constraint({{x, 1.0}, {y, -1.0}}, Relation::kEqual, 0.0);
        continue;
      }
      program.add_constraint({{x, 1.0}, {y, -1.0}}, Relation::kLessEqual, d);
      program.add_constraint({{y, 1.0}, {x, -1.0}}, Relation::kLessEqual, d);
    }
  }
  const lp::LpSolution sol = solve_or_throw(program, "bias_tv");
  return make_bias_report(sol.values, s, t);
}

BiasReport bias_inf(const MetricSpace& space, const GroupDistribution& s,
                    const GroupDistribution& t) {
  const std::size_t n = space.size();
  require_aligned(n, s, t, "bias_inf");
  // u_x = mu_x(0); mu_x(1) = 1 - u_x is substituted out.
  lp::LinearProgram program;
  for (std::size_t x = 0; x < n; ++x) {
    program.add_variable(-(s[x] - t[x]), {0.0, 1.0});
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const double d = space(x, y);
      if (d == 0.0) {
        if (x < y) program.add_constraint({{x, 1.0}, {y, -1.0}}, Relation::kEqual, 0.0);
        continue;
      }
      const double shrink = std::exp(-d);
      // mu_x(0) <= e^d mu_y(0)
      program.add_constraint({{x, shrink}, {y, -1.0}}, Relation::kLessEqual, 0.0);
      // mu_x(1) <= e^d mu_y(1)
      program.add_constraint({{y, 1.0}, {x, -shrink}}, Relation::kLessEqual,
                             1.0 - shrink);
    }
  }
  const lp::LpSolution sol = solve_or_throw(program, "bias_inf");
  return make_bias_report(sol.values, s, t);
}

BiasReport bias(ProbMetricKind kind, const MetricSpace& space,
                const GroupDistribution& s, const GroupDistribution& t) {
  return kind == ProbMetricKind::kTotalVariation ? bias_tv(space, s, t)
                                                 : bias_inf(space, s, t);
}

TransportPlan earthmover(const MetricSpace& space, const GroupDistribution& s,
                         const GroupDistribution& t, EarthmoverForm form) {
  const std::size_t n = space.size();
  require_aligned(n, s, t, "earthmover");
  lp::LinearProgram program;
  Matrix flow(n, n, 0.0);

  if (form == EarthmoverForm::kGeneral) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) program.add_variable(space(x, y));
    }
    std::vector<std::pair<std::size_t, double>> terms(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) terms[y] = {x * n + y, 1.0};
      program.add_constraint(terms, Relation::kEqual, s[x]);
    }
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x = 0; x < n; ++x) terms[x] = {x * n + y, 1.0};
      program.add_constraint(terms, Relation::kEqual, t[y]);
    }
    const lp::LpSolution sol = solve_or_throw(program, "earthmover");
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) flow(x, y) = std::max(sol.values[x * n + y], 0.0);
    }
  } else {
    if (!space.is_true_metric()) {
      throw InvalidArgument(
          "earthmover: the metric-simplified program needs a verified metric");
    }
    // Off-diagonal pairs only; index of (x, y) is x * (n - 1) + (y < x ? y : y - 1).
    auto index = [n](std::size_t x, std::size_t y) {
      return x * (n - 1) + (y < x ? y : y - 1);
    };
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y) program.add_variable(space(x, y));
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<std::pair<std::size_t, double>> terms;
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x) continue;
        terms.emplace_back(index(x, y), 1.0);
        terms.emplace_back(index(y, x), -1.0);
      }
      program.add_constraint(terms, Relation::kEqual, s[x] - t[x]);
    }
    const lp::LpSolution sol = solve_or_throw(program, "earthmover");
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y) flow(x, y) = std::max(sol.values[index(x, y)], 0.0);
      }
    }
  }

  double cost = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) cost += flow(x, y) * space(x, y);
  }
  return TransportPlan{std::move(flow), cost};
}

EmTvReport verify_em_tv(const MetricSpace& space, const GroupDistribution& s,
                        const GroupDistribution& t, double tol) {
  EmTvReport r{};
  r.bias_tv = bias_tv(space, s, t).value;
  r.em_cost = earthmover(space, s, t, EarthmoverForm::kGeneral).cost;
  r.upper_bound_holds = r.bias_tv <= r.em_cost + tol;
  r.equality_expected = space.is_true_metric() && space.max_distance() <= 1.0;
  r.equality_holds = std::abs(r.bias_tv - r.em_cost) <= tol;
  return r;
}

}  // namespace fairlip
