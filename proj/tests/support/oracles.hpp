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

#ifndef FAIRLIP_TESTS_ORACLES_HPP_
#define FAIRLIP_TESTS_ORACLES_HPP_

// Brute-force reference computations. None of them calls into the library's
// solvers or metric helpers; they only read the plain data of the inputs.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "fairlip/lp.hpp"
#include "fairlip/types.hpp"

namespace fairlip::testing {

inline constexpr double kOracleInf = std::numeric_limits<double>::infinity();

// Solves the square system a x = b by Gaussian elimination with partial
// pivoting. nullopt when singular.
inline std::optional<std::vector<double>> solve_square(std::vector<std::vector<double>> a,
                                                       std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    }
    if (std::abs(a[p][c]) < 1e-11) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      if (f == 0.0) continue;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

struct VertexOptimum {
  double value;
  std::vector<double> point;
};

// Minimum of a linear program with finite bounds on every variable, found by
// visiting every vertex: each variable sits at a bound unless it is one of k
// "free" variables pinned down by k tight rows (all equality rows included).
// nullopt when no vertex is feasible.
inline std::optional<VertexOptimum> vertex_oracle(const lp::LinearProgram& p,
                                                  double tol = 1e-9) {
  const std::size_t n = p.variable_count();
  const auto& rows = p.constraints();
  const auto& bounds = p.bounds();
  const auto& cost = p.objective();
  const std::size_t m = rows.size();
  std::vector<std::size_t> equalities;
  for (std::size_t r = 0; r < m; ++r) {
    if (rows[r].relation == lp::Relation::kEqual) equalities.push_back(r);
  }

  std::optional<VertexOptimum> best;
  auto feasible = [&](const std::vector<double>& x) {
    for (std::size_t j = 0; j < n; ++j) {
      if (x[j] < bounds[j].lower - tol || x[j] > bounds[j].upper + tol) return false;
    }
    for (const auto& row : rows) {
      double lhs = 0.0;
      for (std::size_t j = 0; j < n; ++j) lhs += row.coeffs[j] * x[j];
      const double scale = 1.0 + std::abs(row.rhs);
      if (row.relation != lp::Relation::kGreaterEqual && lhs > row.rhs + tol * scale) {
        return false;
      }
      if (row.relation != lp::Relation::kLessEqual && lhs < row.rhs - tol * scale) {
        return false;
      }
    }
    return true;
  };
  auto consider = [&](const std::vector<double>& x) {
    if (!feasible(x)) return;
    double v = 0.0;
    for (std::size_t j = 0; j < n; ++j) v += cost[j] * x[j];
    if (!best || v < best->value) best = VertexOptimum{v, x};
  };

  // Enumerate k-subsets of 0..universe-1 in lexicographic order.
  auto subsets = [](std::size_t universe, std::size_t k,
                    const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > universe) return;
    while (true) {
      fn(idx);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == universe - k + i - 1) --i;
      if (i == 0) return;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  };

  for (std::size_t k = equalities.size(); k <= std::min(n, m); ++k) {
    subsets(n, k, [&](const std::vector<std::size_t>& free_vars) {
      std::vector<bool> is_free(n, false);
      for (std::size_t j : free_vars) is_free[j] = true;
      std::vector<std::size_t> fixed;
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_free[j]) fixed.push_back(j);
      }
      subsets(m, k, [&](const std::vector<std::size_t>& tight) {
        for (std::size_t e : equalities) {
          if (std::find(tight.begin(), tight.end(), e) == tight.end()) return;
        }
        for (std::size_t mask = 0; mask < (std::size_t{1} << fixed.size()); ++mask) {
          std::vector<double> x(n, 0.0);
          for (std::size_t i = 0; i < fixed.size(); ++i) {
            const auto& bd = bounds[fixed[i]];
            x[fixed[i]] = (mask >> i) & 1 ? bd.upper : bd.lower;
          }
          std::vector<std::vector<double>> a(k, std::vector<double>(k));
          std::vector<double> b(k);
          for (std::size_t r = 0; r < k; ++r) {
            const auto& row = rows[tight[r]];
            b[r] = row.rhs;
            for (std::size_t j : fixed) b[r] -= row.coeffs[j] * x[j];
            for (std::size_t c = 0; c < k; ++c) a[r][c] = row.coeffs[free_vars[c]];
          }
          auto sol = solve_square(std::move(a), std::move(b));
          if (!sol) continue;
          for (std::size_t c = 0; c < k; ++c) x[free_vars[c]] = (*sol)[c];
          consider(x);
        }
      });
    });
  }
  return best;
}

inline double oracle_tv(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return 0.5 * s;
}

inline double oracle_dinf(const std::vector<double>& p, const std::vector<double>& q) {
  double worst = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0 && q[i] == 0.0) continue;
    if (p[i] == 0.0 || q[i] == 0.0) return kOracleInf;
    worst = std::max(worst, std::abs(std::log(p[i] / q[i])));
  }
  return worst;
}

// Minimum expected loss over two-outcome maps whose rows (p, 1 - p) have p on
// the grid {0, step, 2 step, ..., 1}, subject to the Lipschitz condition.
// Intended for n <= 3.
inline double fairness_grid_oracle(const FairnessInstance& inst, ProbMetricKind kind,
                                   double step = 0.02) {
  const std::size_t n = inst.individuals();
  const int ticks = static_cast<int>(std::lround(1.0 / step));
  std::vector<int> idx(n, 0);
  double best = kOracleInf;
  while (true) {
    std::vector<std::vector<double>> rows(n);
    for (std::size_t x = 0; x < n; ++x) {
      const double p = static_cast<double>(idx[x]) / ticks;
      rows[x] = {p, 1.0 - p};
    }
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = x + 1; y < n && ok; ++y) {
        const double d = inst.space()(x, y);
        const double gap = kind == ProbMetricKind::kTotalVariation
                               ? oracle_tv(rows[x], rows[y])
                               : oracle_dinf(rows[x], rows[y]);
        ok = gap <= d + 1e-12;
      }
    }
    if (ok) {
      double v = 0.0;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t a = 0; a < 2; ++a) {
          v += inst.base()[x] * inst.loss()(x, a) * rows[x][a];
        }
      }
      best = std::min(best, v);
    }
    std::size_t i = 0;
    while (i < n && idx[i] == ticks) idx[i++] = 0;
    if (i == n) break;
    ++idx[i];
  }
  return best;
}

// Average over a uniform x of E_{y ~ e^{-|y - x|}} |y - x| on the full integer
// lattice Z^dim, truncated to a cube of half-width `radius`.
inline double lattice_expmech_loss(std::size_t dim, int radius) {
  double num = 0.0;
  double den = 0.0;
  std::vector<int> z(dim, -radius);
  while (true) {
    double r2 = 0.0;
    for (int c : z) r2 += static_cast<double>(c) * c;
    const double r = std::sqrt(r2);
    const double w = std::exp(-r);
    num += r * w;
    den += w;
    std::size_t i = 0;
    while (i < dim && z[i] == radius) z[i++] = -radius;
    if (i == dim) break;
    ++z[i];
  }
  return num / den;
}

}  // namespace fairlip::testing

#endif  // FAIRLIP_TESTS_ORACLES_HPP_
