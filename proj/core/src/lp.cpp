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

#include "fairlip/lp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fairlip/error.hpp"

namespace fairlip::lp {

std::size_t LinearProgram::add_variable(double cost, Bound bound) {
  if (!constraints_.empty()) {
    throw InvalidArgument("LinearProgram: variables must precede constraints");
  }
  objective_.push_back(cost);
  bounds_.push_back(bound);
  return objective_.size() - 1;
}

void LinearProgram::add_constraint(std::vector<double> coeffs,
                                   Relation relation, double rhs) {
  constraints_.push_back({std::move(coeffs), relation, rhs});
}

void LinearProgram::add_constraint(
    std::span<const std::pair<std::size_t, double>> terms, Relation relation,
    double rhs) {
  std::vector<double> coeffs(objective_.size(), 0.0);
  for (const auto& [var, value] : terms) {
    if (var >= coeffs.size()) {
      throw InvalidArgument("LinearProgram: constraint references variable " +
                            std::to_string(var) + " of " +
                            std::to_string(coeffs.size()));
    }
    coeffs[var] += value;
  }
  add_constraint(std::move(coeffs), relation, rhs);
}

void LinearProgram::add_constraint(
    std::initializer_list<std::pair<std::size_t, double>> terms,
    Relation relation, double rhs) {
  add_constraint(std::span<const std::pair<std::size_t, double>>(
                     terms.begin(), terms.size()),
                 relation, rhs);
}

void LinearProgram::validate() const {
  const std::size_t n = objective_.size();
  if (bounds_.size() != n) {
    throw InvalidArgument("LinearProgram: bounds/objective length mismatch");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(objective_[j])) {
      throw InvalidArgument("LinearProgram: non-finite objective coefficient");
    }
    const Bound& b = bounds_[j];
    if (std::isnan(b.lower) || std::isnan(b.upper) || b.lower > b.upper ||
        b.lower == kInf || b.upper == -kInf) {
      throw InvalidArgument("LinearProgram: empty bound interval for variable " +
                            std::to_string(j));
    }
  }
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    const Constraint& c = constraints_[i];
    if (c.coeffs.size() != n) {
      throw InvalidArgument("LinearProgram: constraint " + std::to_string(i) +
                            " has " + std::to_string(c.coeffs.size()) +
                            " coefficients, expected " + std::to_string(n));
    }
    if (!std::isfinite(c.rhs)) {
      throw InvalidArgument("LinearProgram: non-finite rhs in constraint " +
                            std::to_string(i));
    }
    for (double a : c.coeffs) {
      if (!std::isfinite(a)) {
        throw InvalidArgument("LinearProgram: non-finite coefficient in "
                              "constraint " + std::to_string(i));
      }
    }
  }
}

double LinearProgram::max_violation(std::span<const double> values) const {
  double worst = 0.0;
  for (std::size_t j = 0; j < bounds_.size(); ++j) {
    worst = std::max(worst, bounds_[j].lower - values[j]);
    worst = std::max(worst, values[j] - bounds_[j].upper);
  }
  for (const Constraint& c : constraints_) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < c.coeffs.size(); ++j) lhs += c.coeffs[j] * values[j];
    switch (c.relation) {
      case Relation::kLessEqual:
        worst = std::max(worst, lhs - c.rhs);
        break;
      case Relation::kGreaterEqual:
        worst = std::max(worst, c.rhs - lhs);
        break;
      case Relation::kEqual:
        worst = std::max(worst, std::abs(lhs - c.rhs));
        break;
    }
  }
  return worst;
}

double LinearProgram::evaluate(std::span<const double> values) const {
  double z = 0.0;
  for (std::size_t j = 0; j < objective_.size(); ++j) z += objective_[j] * values[j];
  return z;
}

const char* to_string(Status status) {
  switch (status) {
    case Status::kOptimal:
      return "optimal";
    case Status::kInfeasible:
      return "infeasible";
    case Status::kUnbounded:
      return "unbounded";
  }
  return "?";
}

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kReducedCostTol = 1e-10;
constexpr double kDegenerateRatio = 1e-12;

// How an original variable is expressed through nonnegative columns.
struct VarMap {
  enum Kind { kShift, kReflect, kSplit } kind;
  std::size_t col;
  std::size_t col2;  // negative part for kSplit
  double offset;
};

// Program rewritten as A v = b, v >= 0, b >= 0.
struct StandardForm {
  std::size_t rows = 0;
  std::size_t structural = 0;  // columns that map back to variables
  std::size_t cols = 0;        // structural + slack columns
  std::vector<double> a;       // rows x cols
  std::vector<double> b;
  std::vector<double> cost;    // per column
  std::vector<std::size_t> initial_slack;  // per row: slack column or npos
  std::vector<VarMap> vars;
  double cost_offset = 0.0;
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

StandardForm to_standard_form(const LinearProgram& p) {
  StandardForm sf;
  const std::size_t n = p.variable_count();

  struct Row {
    std::vector<std::pair<std::size_t, double>> terms;
    Relation rel;
    double rhs;
  };
  std::vector<Row> rows;

  sf.vars.reserve(n);
  std::vector<std::pair<std::size_t, double>> upper_rows;  // col, limit
  for (std::size_t j = 0; j < n; ++j) {
    const Bound& bd = p.bounds()[j];
    const bool lo = std::isfinite(bd.lower);
    const bool hi = std::isfinite(bd.upper);
    if (lo) {
      sf.vars.push_back({VarMap::kShift, sf.structural++, kNone, bd.lower});
      if (hi) upper_rows.emplace_back(sf.vars.back().col, bd.upper - bd.lower);
    } else if (hi) {
      sf.vars.push_back({VarMap::kReflect, sf.structural++, kNone, bd.upper});
    } else {
      const std::size_t pos = sf.structural++;
      const std::size_t neg = sf.structural++;
      sf.vars.push_back({VarMap::kSplit, pos, neg, 0.0});
    }
  }

  auto substitute = [&](std::span<const double> coeffs, double& rhs) {
    std::vector<std::pair<std::size_t, double>> terms;
    for (std::size_t j = 0; j < n; ++j) {
      const double aj = coeffs[j];
      if (aj == 0.0) continue;
      const VarMap& vm = sf.vars[j];
      switch (vm.kind) {
        case VarMap::kShift:
          terms.emplace_back(vm.col, aj);
          rhs -= aj * vm.offset;
          break;
        case VarMap::kReflect:
          terms.emplace_back(vm.col, -aj);
          rhs -= aj * vm.offset;
          break;
        case VarMap::kSplit:
          terms.emplace_back(vm.col, aj);
          terms.emplace_back(vm.col2, -aj);
          break;
      }
    }
    return terms;
  };

  for (const Constraint& c : p.constraints()) {
    double rhs = c.rhs;
    auto terms = substitute(c.coeffs, rhs);
    rows.push_back({std::move(terms), c.relation, rhs});
  }
  for (const auto& [col, limit] : upper_rows) {
    rows.push_back({{{col, 1.0}}, Relation::kLessEqual, limit});
  }

  // b >= 0; zero-rhs rows prefer the <= orientation so a slack can start basic.
  for (Row& r : rows) {
    const bool flip = r.rhs < 0.0 || (r.rhs == 0.0 && r.rel == Relation::kGreaterEqual);
    if (!flip) continue;
    r.rhs = -r.rhs;
    for (auto& t : r.terms) t.second = -t.second;
    if (r.rel == Relation::kLessEqual) {
      r.rel = Relation::kGreaterEqual;
    } else if (r.rel == Relation::kGreaterEqual) {
      r.rel = Relation::kLessEqual;
    }
  }

  std::size_t slacks = 0;
  for (const Row& r : rows) {
    if (r.rel != Relation::kEqual) ++slacks;
  }
  sf.rows = rows.size();
  sf.cols = sf.structural + slacks;
  sf.a.assign(sf.rows * sf.cols, 0.0);
  sf.b.resize(sf.rows);
  sf.initial_slack.assign(sf.rows, kNone);
  std::size_t next_slack = sf.structural;
  for (std::size_t i = 0; i < sf.rows; ++i) {
    const Row& r = rows[i];
    double* row = sf.a.data() + i * sf.cols;
    for (const auto& [col, v] : r.terms) row[col] += v;
    sf.b[i] = r.rhs;
    if (r.rel == Relation::kLessEqual) {
      row[next_slack] = 1.0;
      sf.initial_slack[i] = next_slack++;
    } else if (r.rel == Relation::kGreaterEqual) {
      row[next_slack++] = -1.0;
    }
  }

  sf.cost.assign(sf.cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double cj = p.objective()[j];
    const VarMap& vm = sf.vars[j];
    switch (vm.kind) {
      case VarMap::kShift:
        sf.cost[vm.col] += cj;
        sf.cost_offset += cj * vm.offset;
        break;
      case VarMap::kReflect:
        sf.cost[vm.col] -= cj;
        sf.cost_offset += cj * vm.offset;
        break;
      case VarMap::kSplit:
        sf.cost[vm.col] += cj;
        sf.cost[vm.col2] -= cj;
        break;
    }
  }
  return sf;
}

// Dense simplex tableau. Columns [0, cols) are variables; the rhs is kept
// separately. `reduced` holds reduced costs, `z` the current objective.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0.0), rhs_(rows, 0.0),
        orig_(rows, 0.0), basis_(rows, kNone), reduced_(cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  double& rhs(std::size_t i) { return rhs_[i]; }
  // Right-hand side before perturbation, transformed alongside rhs().
  double& original_rhs(std::size_t i) { return orig_[i]; }
  void restore_original_rhs() { rhs_ = orig_; }
  std::size_t& basis(std::size_t i) { return basis_[i]; }
  std::size_t basis(std::size_t i) const { return basis_[i]; }
  std::vector<double>& reduced() { return reduced_; }
  double z() const { return z_; }

  // Reduced costs and objective for per-column costs `c`.
  void price(std::span<const double> c) {
    for (std::size_t j = 0; j < cols_; ++j) reduced_[j] = c[j];
    z_ = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const double cb = c[basis_[i]];
      if (cb == 0.0) continue;
      const double* row = a_.data() + i * cols_;
      for (std::size_t j = 0; j < cols_; ++j) reduced_[j] -= cb * row[j];
      z_ += cb * rhs_[i];
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    double* prow = a_.data() + r * cols_;
    const double inv = 1.0 / prow[c];
    nonzero_.clear();
    for (std::size_t j = 0; j < cols_; ++j) {
      if (prow[j] != 0.0) {
        prow[j] *= inv;
        nonzero_.push_back(j);
      }
    }
    prow[c] = 1.0;
    rhs_[r] *= inv;
    orig_[r] *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      double* row = a_.data() + i * cols_;
      const double f = row[c];
      if (f == 0.0) continue;
      for (std::size_t j : nonzero_) row[j] -= f * prow[j];
      row[c] = 0.0;
      rhs_[i] -= f * rhs_[r];
      orig_[i] -= f * orig_[r];
    }
    const double f = reduced_[c];
    if (f != 0.0) {
      for (std::size_t j : nonzero_) reduced_[j] -= f * prow[j];
      reduced_[c] = 0.0;
      z_ += f * rhs_[r];
    }
    basis_[r] = c;
  }

  // Removes the listed rows and keeps only columns [0, keep_cols).
  void compact(const std::vector<bool>& drop_row, std::size_t keep_cols) {
    std::vector<double> a;
    std::vector<double> rhs;
    std::vector<double> orig;
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (drop_row[i]) continue;
      const double* row = a_.data() + i * cols_;
      a.insert(a.end(), row, row + keep_cols);
      rhs.push_back(rhs_[i]);
      orig.push_back(orig_[i]);
      basis.push_back(basis_[i]);
    }
    rows_ = rhs.size();
    cols_ = keep_cols;
    a_ = std::move(a);
    rhs_ = std::move(rhs);
    orig_ = std::move(orig);
    basis_ = std::move(basis);
    reduced_.assign(cols_, 0.0);
  }

  const std::vector<double>& rhs_values() const { return rhs_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> a_;
  std::vector<double> rhs_;
  std::vector<double> orig_;
  std::vector<std::size_t> basis_;
  std::vector<double> reduced_;
  double z_ = 0.0;
  std::vector<std::size_t> nonzero_;
};

enum class PhaseResult { kOptimal, kUnbounded };

class Simplex {
 public:
  Simplex(Tableau& t, const SolveOptions& options, std::size_t iteration_cap)
      : t_(t), options_(options), cap_(iteration_cap) {}

  // Minimizes over columns [0, enterable).
  PhaseResult run(std::size_t enterable) {
    bool bland = options_.rule == PivotRule::kBland;
    std::size_t degenerate_run = 0;
    std::vector<bool> is_basic(t_.cols(), false);
    for (std::size_t i = 0; i < t_.rows(); ++i) is_basic[t_.basis(i)] = true;
    while (true) {
      const std::size_t c = choose_entering(enterable, bland, is_basic);
      if (c == kNone) return PhaseResult::kOptimal;
      const std::size_t r = choose_leaving(c);
      if (r == kNone) return PhaseResult::kUnbounded;
      if (++iterations_ > cap_) {
        throw InternalError("simplex: iteration limit exceeded");
      }
      const double ratio = std::max(t_.rhs(r), 0.0) / t_.at(r, c);
      if (ratio <= kDegenerateRatio) {
        if (++degenerate_run > options_.degenerate_run_limit) bland = true;
      } else {
        degenerate_run = 0;
      }
      is_basic[t_.basis(r)] = false;
      is_basic[c] = true;
      t_.pivot(r, c);
    }
  }

  std::size_t iterations() const { return iterations_; }

 private:
  std::size_t choose_entering(std::size_t enterable, bool bland,
                              const std::vector<bool>& is_basic) const {
    const std::vector<double>& d = t_.reduced();
    std::size_t best = kNone;
    double best_value = -kReducedCostTol;
    for (std::size_t j = 0; j < enterable; ++j) {
      if (is_basic[j] || d[j] >= -kReducedCostTol) continue;
      if (bland) return j;
      if (d[j] < best_value) {
        best_value = d[j];
        best = j;
      }
    }
    return best;
  }

  // Minimum ratio; ties go to the lowest basic column index.
  std::size_t choose_leaving(std::size_t c) const {
    std::size_t best = kNone;
    double best_ratio = kInf;
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      const double a = t_.at(i, c);
      if (a <= kPivotTol) continue;
      const double ratio = std::max(t_.rhs(i), 0.0) / a;
      if (best == kNone) {
        best = i;
        best_ratio = ratio;
        continue;
      }
      const double slack = 1e-12 * (1.0 + best_ratio);
      if (ratio < best_ratio - slack) {
        best = i;
        best_ratio = ratio;
      } else if (ratio <= best_ratio + slack && t_.basis(i) < t_.basis(best)) {
        best = i;
        best_ratio = std::min(best_ratio, ratio);
      }
    }
    return best;
  }

  Tableau& t_;
  const SolveOptions& options_;
  std::size_t cap_;
  std::size_t iterations_ = 0;
};

// Dual simplex from a dual-feasible tableau until every rhs is at least
// -tol. Returns false if some row proves the program infeasible.
bool dual_cleanup(Tableau& t, double tol, std::size_t cap) {
  for (std::size_t iter = 0;; ++iter) {
    std::size_t r = kNone;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (t.rhs(i) < -tol && (r == kNone || t.rhs(i) < t.rhs(r))) r = i;
    }
    if (r == kNone) return true;
    if (iter > cap) throw InternalError("simplex: dual cleanup did not converge");
    std::size_t c = kNone;
    double best_ratio = kInf;
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const double a = t.at(r, j);
      if (a >= -kPivotTol) continue;
      const double ratio = std::max(t.reduced()[j], 0.0) / -a;
      const double slack = 1e-12 * (1.0 + best_ratio);
      if (c == kNone || ratio < best_ratio - slack ||
          (ratio <= best_ratio + slack && a < t.at(r, c))) {
        c = j;
        best_ratio = std::min(best_ratio, ratio);
      }
    }
    if (c == kNone) return false;
    t.pivot(r, c);
  }
}

// Solves the square system B x = rhs by Gaussian elimination with partial
// pivoting. Returns false if B is numerically singular.
bool solve_square(std::vector<double> m, std::vector<double> rhs, std::size_t n,
                  std::vector<double>& out) {
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(m[i * n + k]) > std::abs(m[p * n + k])) p = i;
    }
    if (std::abs(m[p * n + k]) < 1e-13) return false;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
      std::swap(rhs[k], rhs[p]);
    }
    const double piv = m[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = m[i * n + k] / piv;
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) m[i * n + j] -= f * m[k * n + j];
      rhs[i] -= f * rhs[k];
    }
  }
  out.assign(n, 0.0);
  for (std::size_t k = n; k-- > 0;) {
    double s = rhs[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= m[k * n + j] * out[j];
    out[k] = s / m[k * n + k];
  }
  return true;
}

std::vector<double> map_back(const StandardForm& sf,
                             std::span<const double> columns) {
  std::vector<double> x(sf.vars.size());
  for (std::size_t j = 0; j < sf.vars.size(); ++j) {
    const VarMap& vm = sf.vars[j];
    switch (vm.kind) {
      case VarMap::kShift:
        x[j] = vm.offset + columns[vm.col];
        break;
      case VarMap::kReflect:
        x[j] = vm.offset - columns[vm.col];
        break;
      case VarMap::kSplit:
        x[j] = columns[vm.col] - columns[vm.col2];
        break;
    }
  }
  return x;
}


// Relative size of the rhs perturbation applied to rows that start with a
// slack in the basis. Distinct per row so that no basis stays degenerate.
constexpr double kPerturbation = 1e-7;

double perturbation(std::size_t row, double rhs) {
  const double spread = static_cast<double>((row * 2654435761u) % 1000) / 1000.0;
  return kPerturbation * (1.0 + std::abs(rhs)) * (1.0 + spread);
}

LpSolution solve_standard(const LinearProgram& program, const StandardForm& sf,
                          const SolveOptions& options, bool perturb) {
  const std::size_t m = sf.rows;

  // Artificial columns follow the slacks, one per row lacking a slack basis.
  std::vector<std::size_t> artificial_of(m, kNone);
  std::size_t total = sf.cols;
  for (std::size_t i = 0; i < m; ++i) {
    if (sf.initial_slack[i] == kNone) artificial_of[i] = total++;
  }

  // Only slack rows are perturbed, and only upward: the perturbed program
  // relaxes the original one.
  Tableau t(m, total);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < sf.cols; ++j) t.at(i, j) = sf.a[i * sf.cols + j];
    t.original_rhs(i) = sf.b[i];
    t.rhs(i) = sf.b[i];
    if (artificial_of[i] != kNone) {
      t.at(i, artificial_of[i]) = 1.0;
      t.basis(i) = artificial_of[i];
    } else {
      t.basis(i) = sf.initial_slack[i];
      if (perturb) t.rhs(i) += perturbation(i, sf.b[i]);
    }
  }

  const std::size_t cap = 200 * (m + total) + 10000;
  LpSolution result;

  std::vector<double> phase1_cost(total, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (artificial_of[i] != kNone) phase1_cost[artificial_of[i]] = 1.0;
  }
  t.price(phase1_cost);

  // Zero-rhs rows can swap their artificial out with a degenerate pivot.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis(i) < sf.cols || t.rhs(i) != 0.0) continue;
    std::size_t best = kNone;
    for (std::size_t j = 0; j < sf.cols; ++j) {
      const double a = std::abs(t.at(i, j));
      if (a > kPivotTol && (best == kNone || a > std::abs(t.at(i, best)))) best = j;
    }
    if (best != kNone) t.pivot(i, best);
  }

  Simplex phase1(t, options, cap);
  phase1.run(sf.cols);
  result.iterations = phase1.iterations();

  double bmax = 1.0;
  for (double v : sf.b) bmax = std::max(bmax, std::abs(v));
  const double feas_tol = kFeasibilityTol * bmax;
  if (t.z() > feas_tol) {
    result.status = Status::kInfeasible;
    return result;
  }

  // Drive remaining (zero-level) artificials out; rows that cannot be
  // pivoted are linearly dependent and dropped, unless the unperturbed
  // right-hand side leaves them inconsistent.
  std::vector<bool> drop(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis(i) < sf.cols) continue;
    std::size_t best = kNone;
    for (std::size_t j = 0; j < sf.cols; ++j) {
      const double a = std::abs(t.at(i, j));
      if (a > kPivotTol && (best == kNone || a > std::abs(t.at(i, best)))) best = j;
    }
    if (best == kNone) {
      if (std::abs(t.original_rhs(i)) > feas_tol) {
        result.status = Status::kInfeasible;
        return result;
      }
      drop[i] = true;
    } else {
      t.rhs(i) = 0.0;
      t.pivot(i, best);
    }
  }
  t.compact(drop, sf.cols);

  t.price(sf.cost);
  Simplex phase2(t, options, cap);
  PhaseResult pr = phase2.run(sf.cols);
  result.iterations += phase2.iterations();
  if (pr == PhaseResult::kUnbounded) {
    result.status = Status::kUnbounded;
    return result;
  }

  if (perturb) {
    // Back to the true right-hand side. The basis stays dual feasible; dual
    // pivots repair the few rows the perturbation was propping up.
    t.restore_original_rhs();
    t.price(sf.cost);
    if (!dual_cleanup(t, 1e-11 * bmax, cap)) {
      result.status = Status::kInfeasible;
      return result;
    }
    Simplex polish(t, options, cap);
    pr = polish.run(sf.cols);
    result.iterations += polish.iterations();
    if (pr == PhaseResult::kUnbounded) {
      result.status = Status::kUnbounded;
      return result;
    }
  }

  // Tableau point.
  std::vector<double> cols(sf.cols, 0.0);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    cols[t.basis(i)] = std::max(t.rhs_values()[i], 0.0);
  }
  std::vector<double> best = map_back(sf, cols);
  double best_violation = program.max_violation(best);

  // Same basis re-solved against the original rows to shed pivoting error.
  const std::size_t k = t.rows();
  std::vector<double> bmat(k * k);
  std::vector<double> brhs(k);
  std::size_t r = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (drop[i]) continue;
    for (std::size_t c = 0; c < k; ++c) {
      bmat[r * k + c] = sf.a[i * sf.cols + t.basis(c)];
    }
    brhs[r] = sf.b[i];
    ++r;
  }
  std::vector<double> xb;
  if (solve_square(std::move(bmat), std::move(brhs), k, xb)) {
    std::vector<double> refined(sf.cols, 0.0);
    for (std::size_t c = 0; c < k; ++c) refined[t.basis(c)] = std::max(xb[c], 0.0);
    std::vector<double> x = map_back(sf, refined);
    const double v = program.max_violation(x);
    if (v <= best_violation) {
      best = std::move(x);
      best_violation = v;
    }
  }

  // Snap onto bounds that rounding nudged past.
  for (std::size_t j = 0; j < best.size(); ++j) {
    const Bound& bd = program.bounds()[j];
    best[j] = std::clamp(best[j], bd.lower, bd.upper);
  }

  result.status = Status::kOptimal;
  result.objective_value = program.evaluate(best);
  result.values = std::move(best);
  return result;
}

}  // namespace

LpSolution solve(const LinearProgram& program, const SolveOptions& options) {
  program.validate();
  const StandardForm sf = to_standard_form(program);
  if (!options.perturb) return solve_standard(program, sf, options, false);
  LpSolution result = solve_standard(program, sf, options, true);
  // An unbounded relaxation can hide an infeasible original; settle it on the
  // unperturbed program.
  if (result.status == Status::kUnbounded) {
    return solve_standard(program, sf, options, false);
  }
  return result;
}

}  // namespace fairlip::lp
