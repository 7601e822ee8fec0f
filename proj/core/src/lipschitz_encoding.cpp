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

#include "lipschitz_encoding.hpp"

#include <cmath>
#include <string>

#include "fairlip/error.hpp"

namespace fairlip::detail {

using lp::Relation;

LipschitzEncoding::LipschitzEncoding(const MetricSpace& space,
                                     std::span<const std::size_t> members,
                                     std::size_t outcomes, ProbMetricKind kind)
    : members_(members.begin(), members.end()), outcomes_(outcomes), kind_(kind) {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (std::size_t j = i + 1; j < members_.size(); ++j) {
      const double d = space(members_[i], members_[j]);
      // Total variation never exceeds 1.
      if (kind_ == ProbMetricKind::kTotalVariation && d >= 1.0) continue;
      pairs_.push_back({i, j, d});
    }
  }
}

void LipschitzEncoding::add_variables(lp::LinearProgram& program) {
  if (kind_ != ProbMetricKind::kTotalVariation) return;
  for (Pair& p : pairs_) {
    if (p.d == 0.0) continue;
    p.aux = program.variable_count();
    for (std::size_t k = 0; k < 2 * outcomes_; ++k) program.add_variable();
  }
}

void LipschitzEncoding::add_constraints(lp::LinearProgram& program,
                                        const VarFn& var) const {
  for (const Pair& p : pairs_) {
    if (p.d == 0.0) {
      for (std::size_t a = 0; a < outcomes_; ++a) {
        program.add_constraint({{var(p.i, a), 1.0}, {var(p.j, a), -1.0}},
                               Relation::kEqual, 0.0);
      }
      continue;
    }
    if (kind_ == ProbMetricKind::kTotalVariation) {
      // mu_x(a) - mu_y(a) = t+(a) - t-(a);  1/2 sum (t+ + t-) <= d.
      std::vector<std::pair<std::size_t, double>> budget;
      for (std::size_t a = 0; a < outcomes_; ++a) {
        const std::size_t pos = p.aux + 2 * a;
        const std::size_t neg = pos + 1;
        program.add_constraint({{var(p.i, a), 1.0},
                                {var(p.j, a), -1.0},
                                {pos, -1.0},
                                {neg, 1.0}},
                               Relation::kEqual, 0.0);
        budget.emplace_back(pos, 0.5);
        budget.emplace_back(neg, 0.5);
      }
      program.add_constraint(budget, Relation::kLessEqual, p.d);
    } else {
      const double shrink = std::exp(-p.d);
      for (std::size_t a = 0; a < outcomes_; ++a) {
        program.add_constraint({{var(p.i, a), shrink}, {var(p.j, a), -1.0}},
                               Relation::kLessEqual, 0.0);
        program.add_constraint({{var(p.j, a), shrink}, {var(p.i, a), -1.0}},
                               Relation::kLessEqual, 0.0);
      }
    }
  }
}

Matrix clean_rows(std::span<const double> values, std::size_t rows,
                  std::size_t cols, std::size_t offset) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < cols; ++c) {
      double v = values[offset + r * cols + c];
      if (v < 1e-13) v = 0.0;
      m(r, c) = v;
      sum += v;
    }
    if (!(sum > 0.5)) {
      throw InternalError("LP returned a row with total mass " + std::to_string(sum));
    }
    for (double& v : m.row(r)) v /= sum;
  }
  return m;
}

}  // namespace fairlip::detail
