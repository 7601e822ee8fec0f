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

#ifndef FAIRLIP_LP_HPP_
#define FAIRLIP_LP_HPP_

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace fairlip::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Feasibility tolerance for reported optimal points.
inline constexpr double kFeasibilityTol = 1e-9;

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Constraint {
  std::vector<double> coeffs;
  Relation relation;
  double rhs;
};

struct Bound {
  double lower = 0.0;
  double upper = kInf;
};

// minimize c^T v subject to dense linear rows and per-variable bounds.
class LinearProgram {
 public:
  LinearProgram() = default;

  // Adds a variable with objective coefficient `cost`; returns its index.
  // Variables must all be added before the first constraint.
  std::size_t add_variable(double cost = 0.0, Bound bound = {});

  void add_constraint(std::vector<double> coeffs, Relation relation,
                      double rhs);
  // Sparse convenience form; `terms` are (variable, coefficient) pairs and
  // repeated variables accumulate.
  void add_constraint(std::span<const std::pair<std::size_t, double>> terms,
                      Relation relation, double rhs);
  void add_constraint(std::initializer_list<std::pair<std::size_t, double>> terms,
                      Relation relation, double rhs);

  void set_cost(std::size_t var, double cost) { objective_[var] = cost; }

  std::size_t variable_count() const { return objective_.size(); }
  std::size_t constraint_count() const { return constraints_.size(); }
  const std::vector<double>& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<Bound>& bounds() const { return bounds_; }

  // Throws InvalidArgument if lengths disagree, data is non-finite, or a
  // bound interval is empty.
  void validate() const;

  // Largest violation of any row or bound at `values` (0 when feasible).
  double max_violation(std::span<const double> values) const;
  double evaluate(std::span<const double> values) const;

 private:
  std::vector<double> objective_;
  std::vector<Constraint> constraints_;
  std::vector<Bound> bounds_;
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

const char* to_string(Status status);

struct LpSolution {
  Status status = Status::kInfeasible;
  std::vector<double> values;
  double objective_value = 0.0;
  std::size_t iterations = 0;
};

enum class PivotRule {
  // Lowest-index improving column throughout.
  kBland,
  // Most negative reduced cost (lowest index on ties); switches to Bland for
  // the rest of the phase after a run of degenerate pivots.
  kDantzigThenBland,
};

struct SolveOptions {
  PivotRule rule = PivotRule::kDantzigThenBland;
  std::size_t degenerate_run_limit = 50;
  // Lift the right-hand side of inequality rows by tiny distinct amounts while
  // pivoting, then restore it and repair with dual pivots. Keeps heavily
  // degenerate programs from stalling.
  bool perturb = true;
};

// Two-phase dense primal simplex. Malformed programs throw InvalidArgument;
// infeasible and unbounded programs are reported through `status`.
LpSolution solve(const LinearProgram& program, const SolveOptions& options = {});

}  // namespace fairlip::lp

#endif  // FAIRLIP_LP_HPP_
