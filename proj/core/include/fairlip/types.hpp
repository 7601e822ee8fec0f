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

#ifndef FAIRLIP_TYPES_HPP_
#define FAIRLIP_TYPES_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fairlip/matrix.hpp"

namespace fairlip {

// Normalization tolerance for probability vectors.
inline constexpr double kProbTol = 1e-9;
// Default slack for Lipschitz and parity checks.
inline constexpr double kLipschitzTol = 1e-6;

using IndexSet = std::vector<std::size_t>;

enum class ProbMetricKind { kTotalVariation, kRelativeLinf };

const char* to_string(ProbMetricKind kind);

// Individuals together with a symmetric, nonnegative distance function that
// vanishes on the diagonal. The triangle inequality is not required; it is
// verified on request and recorded in is_true_metric().
class MetricSpace {
 public:
  MetricSpace(std::vector<std::string> ids, Matrix dist);
  // Ids default to "0", "1", ...
  explicit MetricSpace(Matrix dist);

  // Euclidean distances between points (all of one dimension). Flagged as a
  // true metric without the cubic check.
  static MetricSpace euclidean(const std::vector<std::vector<double>>& points);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const Matrix& distances() const { return dist_; }
  double operator()(std::size_t x, std::size_t y) const { return dist_(x, y); }
  bool is_true_metric() const { return is_true_metric_; }

  double max_distance() const;

  // First (x, y, z) with d(x, z) > d(x, y) + d(y, z) + tol, if any. O(n^3).
  std::optional<std::array<std::size_t, 3>> find_triangle_violation(
      double tol = 1e-9) const;

  // Copy of this space with is_true_metric() set from an explicit
  // triangle-inequality check.
  MetricSpace verified(double tol = 1e-9) const;

  // Restriction to `indices`, in that order. Inherits the metric flag.
  MetricSpace subspace(std::span<const std::size_t> indices) const;

  // Every distance multiplied by `factor` (> 0). Inherits the metric flag.
  MetricSpace scaled(double factor) const;

 private:
  std::vector<std::string> ids_;
  Matrix dist_;
  bool is_true_metric_ = false;
};

// A probability vector over an outcome set.
class OutcomeDistribution {
 public:
  explicit OutcomeDistribution(std::vector<double> probs);

  static OutcomeDistribution point_mass(std::size_t outcomes, std::size_t a);
  static OutcomeDistribution uniform(std::size_t outcomes);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t a) const { return probs_[a]; }
  std::span<const double> probs() const { return probs_; }

  friend bool operator==(const OutcomeDistribution&,
                         const OutcomeDistribution&) = default;

 private:
  std::vector<double> probs_;
};

// One outcome distribution per individual, stored as a row-stochastic matrix.
class StochasticMap {
 public:
  // Rows must each be a probability vector (within kProbTol).
  explicit StochasticMap(Matrix rows);
  explicit StochasticMap(const std::vector<OutcomeDistribution>& rows);

  // Every individual receives the same distribution.
  static StochasticMap constant(std::size_t individuals,
                                const OutcomeDistribution& row);

  std::size_t size() const { return rows_.rows(); }
  std::size_t outcomes() const { return rows_.cols(); }
  std::span<const double> row(std::size_t x) const { return rows_.row(x); }
  OutcomeDistribution distribution(std::size_t x) const;
  const Matrix& matrix() const { return rows_; }

  friend bool operator==(const StochasticMap&, const StochasticMap&) = default;

 private:
  Matrix rows_;
};

// Nonnegative weights over individuals summing to one.
class GroupDistribution {
 public:
  explicit GroupDistribution(std::vector<double> weights);

  static GroupDistribution uniform(std::size_t individuals);
  static GroupDistribution uniform_over(std::size_t individuals,
                                        std::span<const std::size_t> members);
  static GroupDistribution point_mass(std::size_t individuals, std::size_t x);

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t x) const { return weights_[x]; }
  std::span<const double> weights() const { return weights_; }
  IndexSet support() const;

 private:
  std::vector<double> weights_;
};

// Metric space, outcomes, loss L[x][a] and the population distribution used
// for expected loss.
class FairnessInstance {
 public:
  // `base` defaults to uniform over the individuals.
  FairnessInstance(MetricSpace space, std::vector<std::string> outcomes,
                   Matrix loss,
                   std::optional<GroupDistribution> base = std::nullopt);

  const MetricSpace& space() const { return space_; }
  const std::vector<std::string>& outcomes() const { return outcomes_; }
  const Matrix& loss() const { return loss_; }
  const GroupDistribution& base() const { return base_; }
  std::size_t individuals() const { return space_.size(); }
  std::size_t outcome_count() const { return outcomes_.size(); }

 private:
  MetricSpace space_;
  std::vector<std::string> outcomes_;
  Matrix loss_;
  GroupDistribution base_;
};

// Outcome ids "0", "1", ... for anonymous instances.
std::vector<std::string> default_ids(std::size_t n);

}  // namespace fairlip

#endif  // FAIRLIP_TYPES_HPP_
