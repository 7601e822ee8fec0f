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

#include "fairlip/prob_metrics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fairlip/error.hpp"

namespace fairlip {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_same_size(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw InvalidArgument("distributions over different outcome sets (" +
                          std::to_string(p.size()) + " vs " +
                          std::to_string(q.size()) + ")");
  }
}

}  // namespace

double tv_distance(std::span<const double> p, std::span<const double> q) {
  require_same_size(p, q);
  double s = 0.0;
  for (std::size_t a = 0; a < p.size(); ++a) s += std::abs(p[a] - q[a]);
  return 0.5 * s;
}

double tv_distance(const OutcomeDistribution& p, const OutcomeDistribution& q) {
  return tv_distance(p.probs(), q.probs());
}

double dinf_distance(std::span<const double> p, std::span<const double> q) {
  require_same_size(p, q);
  double worst = 0.0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    const double pa = p[a];
    const double qa = q[a];
    if (pa == 0.0 && qa == 0.0) continue;
    if (pa == 0.0 || qa == 0.0) return kInf;
    worst = std::max(worst, std::abs(std::log(pa) - std::log(qa)));
  }
  return worst;
}

double dinf_distance(const OutcomeDistribution& p,
                     const OutcomeDistribution& q) {
  return dinf_distance(p.probs(), q.probs());
}

double distance(ProbMetricKind kind, std::span<const double> p,
                std::span<const double> q) {
  return kind == ProbMetricKind::kTotalVariation ? tv_distance(p, q)
                                                 : dinf_distance(p, q);
}

LipschitzReport check_lipschitz_within(const StochasticMap& m,
                                       const MetricSpace& space,
                                       std::span<const std::size_t> members,
                                       ProbMetricKind kind, double tol) {
  if (m.size() != space.size()) {
    throw InvalidArgument("check_lipschitz: map has " + std::to_string(m.size()) +
                          " rows for " + std::to_string(space.size()) +
                          " individuals");
  }
  LipschitzReport report{-kInf, std::nullopt, true};
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const std::size_t x = members[i];
      const std::size_t y = members[j];
      const double v = distance(kind, m.row(x), m.row(y)) - space(x, y);
      // inf - inf never arises: distances are finite.
      if (!report.worst_pair || v > report.max_violation) {
        report.max_violation = v;
        report.worst_pair = std::pair{x, y};
      }
    }
  }
  report.lipschitz = !(report.max_violation > tol);
  return report;
}

LipschitzReport check_lipschitz(const StochasticMap& m, const MetricSpace& space,
                                ProbMetricKind kind, double tol) {
  IndexSet all(space.size());
  for (std::size_t x = 0; x < all.size(); ++x) all[x] = x;
  return check_lipschitz_within(m, space, all, kind, tol);
}

OutcomeDistribution group_mixture(const StochasticMap& m,
                                  const GroupDistribution& g) {
  if (m.size() != g.size()) {
    throw InvalidArgument("group_mixture: group weights cover " +
                          std::to_string(g.size()) + " individuals, map has " +
                          std::to_string(m.size()));
  }
  std::vector<double> mix(m.outcomes(), 0.0);
  for (std::size_t x = 0; x < m.size(); ++x) {
    const double w = g[x];
    if (w == 0.0) continue;
    auto row = m.row(x);
    for (std::size_t a = 0; a < mix.size(); ++a) mix[a] += w * row[a];
  }
  return OutcomeDistribution(std::move(mix));
}

StochasticMap postprocess(const StochasticMap& m, const Matrix& channel) {
  if (channel.rows() != m.outcomes()) {
    throw InvalidArgument("postprocess: channel has " +
                          std::to_string(channel.rows()) + " input outcomes, map has " +
                          std::to_string(m.outcomes()));
  }
  for (std::size_t a = 0; a < channel.rows(); ++a) {
    double sum = 0.0;
    for (double v : channel.row(a)) {
      if (!std::isfinite(v) || v < 0.0) {
        throw InvalidArgument("postprocess: channel has a negative entry");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kProbTol) {
      throw InvalidArgument("postprocess: channel row " + std::to_string(a) +
                            " sums to " + std::to_string(sum));
    }
  }
  Matrix out(m.size(), channel.cols(), 0.0);
  for (std::size_t x = 0; x < m.size(); ++x) {
    auto in = m.row(x);
    auto dst = out.row(x);
    for (std::size_t a = 0; a < in.size(); ++a) {
      if (in[a] == 0.0) continue;
      auto ch = channel.row(a);
      for (std::size_t b = 0; b < dst.size(); ++b) dst[b] += in[a] * ch[b];
    }
  }
  return StochasticMap(std::move(out));
}

}  // namespace fairlip
