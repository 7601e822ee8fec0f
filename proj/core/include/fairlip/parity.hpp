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

#ifndef FAIRLIP_PARITY_HPP_
#define FAIRLIP_PARITY_HPP_

#include <cstddef>
#include <optional>
#include <span>

#include "fairlip/matrix.hpp"
#include "fairlip/types.hpp"

namespace fairlip {

// D_tv(mu_S, mu_T): the statistical-parity bias of `m` between two groups.
double parity_gap(const StochasticMap& m, const GroupDistribution& s,
                  const GroupDistribution& t);

struct ParityConsequences {
  // |Pr[M(x) in O | x ~ S] - Pr[M(x) in O | x ~ T]|
  double outcome_gap;
  // |Pr[x from S | M(x) in O] - Pr[x from T | M(x) in O]|, with x drawn from
  // the prior-weighted mixture of S and T. Empty when Pr[M(x) in O] = 0.
  std::optional<double> membership_gap;
};

// `outcome_set` lists outcome indices; `prior_s` is the probability that x is
// drawn from S rather than T.
ParityConsequences parity_consequences(const StochasticMap& m,
                                       const GroupDistribution& s,
                                       const GroupDistribution& t,
                                       std::span<const std::size_t> outcome_set,
                                       double prior_s = 0.5);

// Outcomes strictly more likely under mu_S than under mu_T.
IndexSet favored_outcomes(const StochasticMap& m, const GroupDistribution& s,
                          const GroupDistribution& t);

// Collapses the outcomes into {favored by S, the rest}: row x becomes
// (mu_x(A_S), 1 - mu_x(A_S)).
StochasticMap binarize(const StochasticMap& m, const GroupDistribution& s,
                       const GroupDistribution& t);

struct BiasReport {
  double value;
  // Two-outcome Lipschitz map attaining `value` as mu_S(0) - mu_T(0).
  StochasticMap witness;
};

// Largest parity gap any (D_tv, d)-Lipschitz two-outcome map can show.
BiasReport bias_tv(const MetricSpace& space, const GroupDistribution& s,
                   const GroupDistribution& t);

// Same over (D_inf, d)-Lipschitz maps. Never exceeds bias_tv.
BiasReport bias_inf(const MetricSpace& space, const GroupDistribution& s,
                    const GroupDistribution& t);

BiasReport bias(ProbMetricKind kind, const MetricSpace& space,
                const GroupDistribution& s, const GroupDistribution& t);

struct TransportPlan {
  // General form: h(x, y) is mass moved from x (under S) to y (under T).
  // Metric form: net flow with sum_y h(x,y) - sum_y h(y,x) = S(x) - T(x).
  Matrix flow;
  double cost;
};

enum class EarthmoverForm { kGeneral, kMetricSimplified };

// Earthmover LP between S and T with unit cost d(x, y). The metric-simplified
// program requires space.is_true_metric().
TransportPlan earthmover(const MetricSpace& space, const GroupDistribution& s,
                         const GroupDistribution& t,
                         EarthmoverForm form = EarthmoverForm::kGeneral);

struct EmTvReport {
  double bias_tv;
  double em_cost;
  // bias_tv <= em_cost (+ tol).
  bool upper_bound_holds;
  // True metric with every distance <= 1, where the two must coincide.
  bool equality_expected;
  bool equality_holds;

  bool ok() const { return upper_bound_holds && (!equality_expected || equality_holds); }
};

EmTvReport verify_em_tv(const MetricSpace& space, const GroupDistribution& s,
                        const GroupDistribution& t, double tol = kLipschitzTol);

}  // namespace fairlip

#endif  // FAIRLIP_PARITY_HPP_
