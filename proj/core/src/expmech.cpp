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

#include "fairlip/expmech.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fairlip/error.hpp"

namespace fairlip {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Identical-row tolerance for zero-distance pairs, in log space.
constexpr double kSameRowTol = 1e-12;

}  // namespace

ExpMechMap exp_mechanism(const MetricSpace& space, double scale) {
  const std::size_t n = space.size();
  if (n == 0) throw InvalidArgument("exp_mechanism: empty space");
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw InvalidArgument("exp_mechanism: scale must be positive");
  }
  Matrix rows(n, n);
  std::vector<double> z(n);
  std::vector<double> log_z(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto d = space.distances().row(x);
    const double shift = *std::min_element(d.begin(), d.end());
    auto row = rows.row(x);
    double sum = 0.0;
    for (std::size_t y = 0; y < n; ++y) {
      row[y] = std::exp(-scale * (d[y] - shift));
      sum += row[y];
    }
    for (double& v : row) v /= sum;
    log_z[x] = std::log(sum) - scale * shift;
    z[x] = std::exp(log_z[x]);
  }
  return ExpMechMap{StochasticMap(std::move(rows)), scale, std::move(z),
                    std::move(log_z)};
}

double lipschitz_constant(const ExpMechMap& m, const MetricSpace& space) {
  const std::size_t n = space.size();
  if (m.map.size() != n) {
    throw InvalidArgument("lipschitz_constant: map does not match the space");
  }
  const double beta = m.scale;
  double worst = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      // log row_x(z) - log row_y(z)
      //   = beta (d(y, z) - d(x, z)) + log Z_y - log Z_x
      const double dz = m.log_normalizers[y] - m.log_normalizers[x];
      double dinf = 0.0;
      for (std::size_t z = 0; z < n; ++z) {
        dinf = std::max(dinf, std::abs(beta * (space(y, z) - space(x, z)) + dz));
      }
      const double dxy = space(x, y);
      if (dxy == 0.0) {
        if (dinf > kSameRowTol) return kInf;
        continue;
      }
      worst = std::max(worst, dinf / dxy);
    }
  }
  return worst;
}

double expected_loss(const ExpMechMap& m, const MetricSpace& space) {
  const std::size_t n = space.size();
  if (m.map.size() != n) {
    throw InvalidArgument("expected_loss: map does not match the space");
  }
  double total = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    auto row = m.map.row(x);
    auto d = space.distances().row(x);
    double inner = 0.0;
    for (std::size_t y = 0; y < n; ++y) inner += row[y] * d[y];
    total += inner;
  }
  return total / static_cast<double>(n);
}

BallProfile ball_profile(const MetricSpace& space, std::span<const double> radii) {
  const std::size_t n = space.size();
  if (n == 0) throw InvalidArgument("ball_profile: empty space");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] >= 0.0) || (i > 0 && radii[i] < radii[i - 1])) {
      throw InvalidArgument("ball_profile: radii must be nonnegative and ascending");
    }
  }
  // Sorted distance rows make each count a binary search.
  std::vector<std::vector<double>> sorted(n);
  double separation = kInf;
  for (std::size_t x = 0; x < n; ++x) {
    auto d = space.distances().row(x);
    sorted[x].assign(d.begin(), d.end());
    std::sort(sorted[x].begin(), sorted[x].end());
    if (n > 1) separation = std::min(separation, sorted[x][1]);
  }
  auto average_count = [&](double r) {
    double total = 0.0;
    for (const auto& row : sorted) {
      total += static_cast<double>(std::upper_bound(row.begin(), row.end(), r) -
                                   row.begin());
    }
    return total / static_cast<double>(n);
  };

  BallProfile out;
  out.radii.assign(radii.begin(), radii.end());
  for (double r : radii) {
    const double here = average_count(r);
    out.avg_counts.push_back(here);
    out.doubling_exponents.push_back(std::log2(average_count(2.0 * r) / here));
  }
  out.separation_eps = separation;
  return out;
}

std::vector<std::size_t> nearest_in_subset(const MetricSpace& space,
                                           std::span<const std::size_t> subset) {
  if (subset.empty()) throw InvalidArgument("nearest_in_subset: empty subset");
  for (std::size_t v : subset) {
    if (v >= space.size()) throw InvalidArgument("nearest_in_subset: index out of range");
  }
  std::vector<std::size_t> nearest(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < subset.size(); ++i) {
      if (space(x, subset[i]) < space(x, subset[best])) best = i;
    }
    nearest[x] = best;
  }
  return nearest;
}

double coverage_radius(const MetricSpace& space, std::span<const std::size_t> subset) {
  const std::vector<std::size_t> nearest = nearest_in_subset(space, subset);
  double r = 0.0;
  for (std::size_t x = 0; x < space.size(); ++x) {
    r = std::max(r, space(x, subset[nearest[x]]));
  }
  return r;
}

StochasticMap extend_from_subset(const MetricSpace& space,
                                 std::span<const std::size_t> subset,
                                 const StochasticMap& inner) {
  if (inner.size() != subset.size()) {
    throw InvalidArgument("extend_from_subset: inner map has " +
                          std::to_string(inner.size()) + " rows for a subset of " +
                          std::to_string(subset.size()));
  }
  const std::vector<std::size_t> nearest = nearest_in_subset(space, subset);
  Matrix rows(space.size(), inner.outcomes());
  for (std::size_t x = 0; x < space.size(); ++x) {
    auto src = inner.row(nearest[x]);
    std::copy(src.begin(), src.end(), rows.row(x).begin());
  }
  return StochasticMap(std::move(rows));
}

MetricSpace lattice_grid(std::size_t dim, std::size_t side, double spacing) {
  if (dim == 0 || side == 0) throw InvalidArgument("lattice_grid: empty grid");
  std::size_t n = 1;
  for (std::size_t k = 0; k < dim; ++k) n *= side;
  std::vector<std::vector<double>> coords(n, std::vector<double>(dim));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rest = i;
    for (std::size_t k = dim; k-- > 0;) {
      coords[i][k] = static_cast<double>(rest % side) * spacing;
      rest /= side;
    }
  }
  return MetricSpace::euclidean(coords);
}

}  // namespace fairlip
