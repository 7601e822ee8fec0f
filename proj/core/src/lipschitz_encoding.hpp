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

#ifndef FAIRLIP_SRC_LIPSCHITZ_ENCODING_HPP_
#define FAIRLIP_SRC_LIPSCHITZ_ENCODING_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "fairlip/lp.hpp"
#include "fairlip/types.hpp"

namespace fairlip::detail {

// Linear rows forcing D(row_x, row_y) <= d(x, y) for every pair of `members`,
// where row_x(a) is an LP variable. Usage: add_variables() while the program
// is still taking variables, then add_constraints().
class LipschitzEncoding {
 public:
  // Maps (position in members, outcome) to an LP variable index.
  using VarFn = std::function<std::size_t(std::size_t, std::size_t)>;

  LipschitzEncoding(const MetricSpace& space, std::span<const std::size_t> members,
                    std::size_t outcomes, ProbMetricKind kind);

  void add_variables(lp::LinearProgram& program);
  void add_constraints(lp::LinearProgram& program, const VarFn& var) const;

 private:
  struct Pair {
    std::size_t i;  // positions in members_
    std::size_t j;
    double d;
    std::size_t aux = 0;  // first t+ variable (total variation only)
  };

  std::vector<std::size_t> members_;
  std::size_t outcomes_;
  ProbMetricKind kind_;
  std::vector<Pair> pairs_;
};

// Clamps LP output into row-stochastic form: negatives and entries below
// 1e-13 become 0 and each row is renormalized.
Matrix clean_rows(std::span<const double> values, std::size_t rows,
                  std::size_t cols, std::size_t offset = 0);

}  // namespace fairlip::detail

#endif  // FAIRLIP_SRC_LIPSCHITZ_ENCODING_HPP_
