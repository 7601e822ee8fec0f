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

#include "fairlip/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fairlip/error.hpp"

namespace fairlip {

Matrix Matrix::FromRows(const std::vector<std::vector<double>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) {
      throw InvalidArgument("Matrix: ragged rows (row " + std::to_string(r) +
                            " has " + std::to_string(rows[r].size()) +
                            " entries, expected " + std::to_string(m.cols()) +
                            ")");
    }
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> nested;
  for (const auto& r : rows) nested.emplace_back(r);
  *this = FromRows(nested);
}

std::vector<std::vector<double>> Matrix::ToRows() const {
  std::vector<std::vector<double>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto src = row(r);
    out[r].assign(src.begin(), src.end());
  }
  return out;
}

const char* to_string(ProbMetricKind kind) {
  return kind == ProbMetricKind::kTotalVariation ? "tv" : "inf";
}

std::vector<std::string> default_ids(std::size_t n) {
  std::vector<std::string> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = std::to_string(i);
  return ids;
}

InfeasibleParity::InfeasibleParity(double requested_eps, double min_eps)
    : Error("parity constraint infeasible at eps=" + std::to_string(requested_eps) +
            "; smallest feasible eps is " + std::to_string(min_eps)),
      requested_eps_(requested_eps),
      min_eps_(min_eps) {}

// ---------------------------------------------------------------------------
// MetricSpace

namespace {

constexpr double kSymmetryTol = 1e-12;

void check_probability_vector(std::span<const double> p, const char* what) {
  double sum = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < 0.0) {
      throw InvalidArgument(std::string(what) + ": negative or non-finite entry");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kProbTol) {
    throw InvalidArgument(std::string(what) + ": entries sum to " +
                          std::to_string(sum) + ", not 1");
  }
}

}  // namespace

MetricSpace::MetricSpace(std::vector<std::string> ids, Matrix dist)
    : ids_(std::move(ids)), dist_(std::move(dist)) {
  const std::size_t n = ids_.size();
  if (dist_.rows() != n || dist_.cols() != n) {
    throw InvalidArgument("MetricSpace: distance matrix is " +
                          std::to_string(dist_.rows()) + "x" +
                          std::to_string(dist_.cols()) + " for " +
                          std::to_string(n) + " individuals");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (dist_(i, i) != 0.0) {
      throw InvalidArgument("MetricSpace: nonzero diagonal at " + ids_[i]);
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = dist_(i, j);
      const double b = dist_(j, i);
      if (!std::isfinite(a) || !std::isfinite(b) || a < 0.0 || b < 0.0) {
        throw InvalidArgument("MetricSpace: negative or non-finite distance "
                              "between " + ids_[i] + " and " + ids_[j]);
      }
      if (std::abs(a - b) > kSymmetryTol * std::max(1.0, std::abs(a))) {
        throw InvalidArgument("MetricSpace: asymmetric distance between " +
                              ids_[i] + " and " + ids_[j]);
      }
      dist_(i, j) = dist_(j, i) = 0.5 * (a + b);
    }
  }
}

MetricSpace::MetricSpace(Matrix dist)
    : MetricSpace(default_ids(dist.rows()), std::move(dist)) {}

MetricSpace MetricSpace::euclidean(const std::vector<std::vector<double>>& points) {
  const std::size_t n = points.size();
  Matrix d(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (points[i].size() != points.front().size()) {
      throw InvalidArgument("MetricSpace::euclidean: points of mixed dimension");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < points[i].size(); ++k) {
        const double diff = points[i][k] - points[j][k];
        s += diff * diff;
      }
      d(i, j) = d(j, i) = std::sqrt(s);
    }
  }
  MetricSpace out(std::move(d));
  out.is_true_metric_ = true;
  return out;
}

double MetricSpace::max_distance() const {
  double m = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (double v : dist_.row(i)) m = std::max(m, v);
  }
  return m;
}

std::optional<std::array<std::size_t, 3>> MetricSpace::find_triangle_violation(
    double tol) const {
  const std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const double dxy = dist_(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        if (dist_(x, z) > dxy + dist_(y, z) + tol) {
          return std::array<std::size_t, 3>{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

MetricSpace MetricSpace::verified(double tol) const {
  MetricSpace out = *this;
  out.is_true_metric_ = !find_triangle_violation(tol).has_value();
  return out;
}

MetricSpace MetricSpace::subspace(std::span<const std::size_t> indices) const {
  std::vector<std::string> ids;
  Matrix d(indices.size(), indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= size()) {
      throw InvalidArgument("MetricSpace::subspace: index out of range");
    }
    ids.push_back(ids_[indices[i]]);
    for (std::size_t j = 0; j < indices.size(); ++j) {
      d(i, j) = dist_(indices[i], indices[j]);
    }
  }
  MetricSpace out(std::move(ids), std::move(d));
  out.is_true_metric_ = is_true_metric_;
  return out;
}

MetricSpace MetricSpace::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw InvalidArgument("MetricSpace::scaled: factor must be positive");
  }
  Matrix d = dist_;
  for (std::size_t i = 0; i < size(); ++i) {
    for (double& v : d.row(i)) v *= factor;
  }
  MetricSpace out(ids_, std::move(d));
  out.is_true_metric_ = is_true_metric_;
  return out;
}

// ---------------------------------------------------------------------------
// Distributions

OutcomeDistribution::OutcomeDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) throw InvalidArgument("OutcomeDistribution: empty");
  check_probability_vector(probs_, "OutcomeDistribution");
}

OutcomeDistribution OutcomeDistribution::point_mass(std::size_t outcomes,
                                                    std::size_t a) {
  if (a >= outcomes) throw InvalidArgument("point_mass: outcome out of range");
  std::vector<double> p(outcomes, 0.0);
  p[a] = 1.0;
  return OutcomeDistribution(std::move(p));
}

OutcomeDistribution OutcomeDistribution::uniform(std::size_t outcomes) {
  if (outcomes == 0) throw InvalidArgument("uniform: no outcomes");
  return OutcomeDistribution(
      std::vector<double>(outcomes, 1.0 / static_cast<double>(outcomes)));
}

StochasticMap::StochasticMap(Matrix rows) : rows_(std::move(rows)) {
  if (rows_.rows() > 0 && rows_.cols() == 0) {
    throw InvalidArgument("StochasticMap: no outcomes");
  }
  for (std::size_t x = 0; x < rows_.rows(); ++x) {
    check_probability_vector(rows_.row(x), "StochasticMap row");
  }
}

StochasticMap::StochasticMap(const std::vector<OutcomeDistribution>& rows) {
  const std::size_t k = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), k);
  for (std::size_t x = 0; x < rows.size(); ++x) {
    if (rows[x].size() != k) {
      throw InvalidArgument("StochasticMap: rows over different outcome sets");
    }
    std::copy(rows[x].probs().begin(), rows[x].probs().end(), m.row(x).begin());
  }
  rows_ = std::move(m);
}

StochasticMap StochasticMap::constant(std::size_t individuals,
                                      const OutcomeDistribution& row) {
  return StochasticMap(std::vector<OutcomeDistribution>(individuals, row));
}

OutcomeDistribution StochasticMap::distribution(std::size_t x) const {
  auto r = rows_.row(x);
  return OutcomeDistribution(std::vector<double>(r.begin(), r.end()));
}

GroupDistribution::GroupDistribution(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw InvalidArgument("GroupDistribution: empty");
  check_probability_vector(weights_, "GroupDistribution");
}

GroupDistribution GroupDistribution::uniform(std::size_t individuals) {
  if (individuals == 0) throw InvalidArgument("GroupDistribution: empty");
  return GroupDistribution(
      std::vector<double>(individuals, 1.0 / static_cast<double>(individuals)));
}

GroupDistribution GroupDistribution::uniform_over(
    std::size_t individuals, std::span<const std::size_t> members) {
  if (members.empty()) {
    throw InvalidArgument("GroupDistribution: group has no members");
  }
  std::vector<bool> seen(individuals, false);
  std::vector<double> w(individuals, 0.0);
  const double share = 1.0 / static_cast<double>(members.size());
  for (std::size_t x : members) {
    if (x >= individuals) {
      throw InvalidArgument("GroupDistribution: member index out of range");
    }
    if (seen[x]) throw InvalidArgument("GroupDistribution: duplicate member");
    seen[x] = true;
    w[x] = share;
  }
  return GroupDistribution(std::move(w));
}

GroupDistribution GroupDistribution::point_mass(std::size_t individuals,
                                                std::size_t x) {
  const std::size_t one[] = {x};
  return uniform_over(individuals, one);
}

IndexSet GroupDistribution::support() const {
  IndexSet s;
  for (std::size_t x = 0; x < weights_.size(); ++x) {
    if (weights_[x] > 0.0) s.push_back(x);
  }
  return s;
}

// ---------------------------------------------------------------------------
// FairnessInstance

FairnessInstance::FairnessInstance(MetricSpace space,
                                   std::vector<std::string> outcomes,
                                   Matrix loss,
                                   std::optional<GroupDistribution> base)
    : space_(std::move(space)),
      outcomes_(std::move(outcomes)),
      loss_(std::move(loss)),
      base_(base ? std::move(*base) : GroupDistribution::uniform(
                                          std::max<std::size_t>(space_.size(), 1))) {
  if (space_.size() == 0) throw InvalidArgument("FairnessInstance: no individuals");
  if (outcomes_.empty()) throw InvalidArgument("FairnessInstance: no outcomes");
  if (loss_.rows() != space_.size() || loss_.cols() != outcomes_.size()) {
    throw InvalidArgument("FairnessInstance: loss matrix is " +
                          std::to_string(loss_.rows()) + "x" +
                          std::to_string(loss_.cols()) + ", expected " +
                          std::to_string(space_.size()) + "x" +
                          std::to_string(outcomes_.size()));
  }
  for (std::size_t x = 0; x < loss_.rows(); ++x) {
    for (double v : loss_.row(x)) {
      if (!std::isfinite(v)) throw InvalidArgument("FairnessInstance: non-finite loss");
    }
  }
  if (base_.size() != space_.size()) {
    throw InvalidArgument("FairnessInstance: base weights length mismatch");
  }
}

}  // namespace fairlip
