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

#ifndef FAIRLIP_PROB_METRICS_HPP_
#define FAIRLIP_PROB_METRICS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>

#include "fairlip/matrix.hpp"
#include "fairlip/types.hpp"

namespace fairlip {

// Total variation distance: half the l1 distance. In [0, 1].
double tv_distance(std::span<const double> p, std::span<const double> q);
double tv_distance(const OutcomeDistribution& p, const OutcomeDistribution& q);

// Relative l-infinity distance: sup_a |log(p(a) / q(a))|. Outcomes with
// p(a) = q(a) = 0 are skipped; a zero on exactly one side gives +inf.
double dinf_distance(std::span<const double> p, std::span<const double> q);
double dinf_distance(const OutcomeDistribution& p,
                     const OutcomeDistribution& q);

double distance(ProbMetricKind kind, std::span<const double> p,
                std::span<const double> q);

struct LipschitzReport {
  // max over x != y of D(mu_x, mu_y) - d(x, y); -inf with fewer than two
  // individuals.
  double max_violation;
  std::optional<std::pair<std::size_t, std::size_t>> worst_pair;
  bool lipschitz;
};

LipschitzReport check_lipschitz(const StochasticMap& m, const MetricSpace& space,
                                ProbMetricKind kind,
                                double tol = kLipschitzTol);

// Same check restricted to pairs inside `members`.
LipschitzReport check_lipschitz_within(const StochasticMap& m,
                                       const MetricSpace& space,
                                       std::span<const std::size_t> members,
                                       ProbMetricKind kind,
                                       double tol = kLipschitzTol);

// mu_G(a) = E_{x ~ G} mu_x(a).
OutcomeDistribution group_mixture(const StochasticMap& m,
                                  const GroupDistribution& g);

// Pushes every row through a row-stochastic channel over outcomes A -> B.
StochasticMap postprocess(const StochasticMap& m, const Matrix& channel);

}  // namespace fairlip

#endif  // FAIRLIP_PROB_METRICS_HPP_
