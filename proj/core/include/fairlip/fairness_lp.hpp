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

#ifndef FAIRLIP_FAIRNESS_LP_HPP_
#define FAIRLIP_FAIRNESS_LP_HPP_

#include "fairlip/lp.hpp"
#include "fairlip/types.hpp"

namespace fairlip {

// Loss-minimizing Lipschitz map and its expected loss.
struct FairSolution {
  StochasticMap map;
  double opt_value;
};

// Variables mu_x(a) come first, indexed x * |A| + a. For total variation each
// unordered pair with 0 < d(x, y) < 1 adds positive and negative parts
// t+/t-(a) of mu_x(a) - mu_y(a) and one budget row
// 1/2 sum_a (t+ + t-) <= d(x, y); pairs with d >= 1 add nothing. For the
// relative l-infinity metric each ordered pair adds
// e^{-d(x, y)} mu_x(a) - mu_y(a) <= 0 per outcome. Pairs at distance 0 are
// tied by equalities mu_x(a) = mu_y(a) under either metric.
lp::LinearProgram build_fairness_lp(const FairnessInstance& inst,
                                    ProbMetricKind kind);

// Solves the program above. Optima are generally not unique; the solver's
// deterministic pivoting picks the vertex.
FairSolution solve_fairness(const FairnessInstance& inst, ProbMetricKind kind);

// E_{x ~ base} E_{a ~ mu_x} L(x, a).
double expected_loss(const FairnessInstance& inst, const StochasticMap& m);

}  // namespace fairlip

#endif  // FAIRLIP_FAIRNESS_LP_HPP_
