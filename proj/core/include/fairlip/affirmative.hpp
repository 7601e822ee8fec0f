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

#ifndef FAIRLIP_AFFIRMATIVE_HPP_
#define FAIRLIP_AFFIRMATIVE_HPP_

#include <span>

#include "fairlip/matrix.hpp"
#include "fairlip/types.hpp"

namespace fairlip {

// Stage one: each protected individual x in S is sent to a distribution
// mu_x over T.
struct AaPlan {
  // |S| x |T|; row i is mu_{S[i]} over T in the order given.
  StochasticMap assignment;
  // E_{x in S} E_{y ~ mu_x} d(x, y); 0 when S is empty.
  double em_cost;
  double eps;
  ProbMetricKind kind;
};

// Minimizes the expected transport distance from uniform S onto T subject to
// Lipschitz rows inside S and D_tv(mu_S, U_T) <= eps. The uniform assignment
// mu_x = U_T is always feasible for eps >= 0; a negative eps throws
// InfeasibleParity. kRelativeLinf inside S is experimental.
AaPlan solve_em_plus_l(const MetricSpace& space, std::span<const std::size_t> s,
                       std::span<const std::size_t> t, double eps,
                       ProbMetricKind kind = ProbMetricKind::kTotalVariation);

// L'(y, a) = sum_{x in S} mu_x(y) L(x, a) + L(y, a) over T x A. With
// `reweight` false the S term is dropped and L' is L restricted to T.
Matrix reweight_loss(const AaPlan& plan, const FairnessInstance& inst,
                     std::span<const std::size_t> s,
                     std::span<const std::size_t> t, bool reweight = true);

struct AaOptions {
  ProbMetricKind kind = ProbMetricKind::kTotalVariation;
  bool reweight = true;
};

struct ComposedMap {
  // Over all individuals: nu_x on T, E_{y ~ mu_x} nu_y on S.
  StochasticMap map;
  // Loss-minimizing Lipschitz map on T (rows in the order of t).
  StochasticMap inner;
  AaPlan plan;
};

// S and T must partition the individuals; T must be nonempty.
ComposedMap run_affirmative_action(const FairnessInstance& inst,
                                   std::span<const std::size_t> s,
                                   std::span<const std::size_t> t, double eps,
                                   const AaOptions& options = {});

struct ComposedReport {
  double parity_gap;
  bool parity_ok;
  double within_s_violation;
  double within_t_violation;
  bool lipschitz_ok;
  // E_{x in S} max_{y in T} [D_tv(M(x), M(y)) - d(x, y)]
  double cross_average_violation;
  bool cross_bound_ok;

  bool ok() const { return parity_ok && lipschitz_ok && cross_bound_ok; }
};

ComposedReport evaluate_composed(const ComposedMap& composed,
                                 const MetricSpace& space,
                                 std::span<const std::size_t> s,
                                 std::span<const std::size_t> t,
                                 double tol = kLipschitzTol);

}  // namespace fairlip

#endif  // FAIRLIP_AFFIRMATIVE_HPP_
