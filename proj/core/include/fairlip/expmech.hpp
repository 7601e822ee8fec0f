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

#ifndef FAIRLIP_EXPMECH_HPP_
#define FAIRLIP_EXPMECH_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "fairlip/types.hpp"

namespace fairlip {

// Exponential mechanism over a metric space: x is sent to y with probability
// e^{-scale * d(x, y)} / Z_x. Outcomes are the individuals themselves.
struct ExpMechMap {
  StochasticMap map;
  double scale;
  std::vector<double> normalizers;      // Z_x
  std::vector<double> log_normalizers;  // log Z_x, exact even when Z_x overflows
};

ExpMechMap exp_mechanism(const MetricSpace& space, double scale = 1.0);

// max over x != y of D_inf(row_x, row_y) / d(x, y), evaluated in log space.
// Zero-distance pairs contribute 0 if their rows coincide and +inf otherwise.
// On a true metric this is at most 2 * scale.
double lipschitz_constant(const ExpMechMap& m, const MetricSpace& space);

// E_{x uniform} E_{y ~ row_x} d(x, y).
double expected_loss(const ExpMechMap& m, const MetricSpace& space);

struct BallProfile {
  std::vector<double> radii;
  // E_x |B(x, R)| with closed balls B(x, R) = {y : d(x, y) <= R}.
  std::vector<double> avg_counts;
  // log2(E_x |B(x, 2R)| / E_x |B(x, R)|) per radius.
  std::vector<double> doubling_exponents;
  // Smallest off-diagonal distance: every ball of radius below it is a
  // singleton. 0 when two individuals coincide, +inf for a single point.
  double separation_eps;
};

// Radii must be nonnegative and ascending.
BallProfile ball_profile(const MetricSpace& space, std::span<const double> radii);

// For each individual, the position in `subset` of its nearest member (ties to
// the earliest position).
std::vector<std::size_t> nearest_in_subset(const MetricSpace& space,
                                           std::span<const std::size_t> subset);

// max_x min_{x' in subset} d(x, x').
double coverage_radius(const MetricSpace& space, std::span<const std::size_t> subset);

// Extends a map defined on `subset` (rows in subset order) to every individual
// by copying the row of the nearest subset member.
StochasticMap extend_from_subset(const MetricSpace& space,
                                 std::span<const std::size_t> subset,
                                 const StochasticMap& inner);

// Points of {0, ..., side-1}^dim times `spacing` under Euclidean distance, in
// lexicographic order. Flagged as a true metric.
MetricSpace lattice_grid(std::size_t dim, std::size_t side, double spacing = 1.0);

}  // namespace fairlip

#endif  // FAIRLIP_EXPMECH_HPP_
