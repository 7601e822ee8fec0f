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

#include "fairlip/affirmative.hpp"

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "fairlip/error.hpp"
#include "fairlip/fairness_lp.hpp"
#include "fairlip/parity.hpp"
#include "fairlip/prob_metrics.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace fairlip {
namespace {

using testing::Rng;
constexpr ProbMetricKind kTv = ProbMetricKind::kTotalVariation;
constexpr ProbMetricKind kInf = ProbMetricKind::kRelativeLinf;

MetricSpace on_line(const std::vector<double>& xs) {
  std::vector<std::vector<double>> pts;
  for (double x : xs) pts.push_back({x});
  return MetricSpace::euclidean(pts);
}

TEST(SolveEmPlusL, SinglePair) {
  const MetricSpace space = on_line({0.0, 0.7});
  const IndexSet s{0}, t{1};
  const AaPlan plan = solve_em_plus_l(space, s, t, 0.0);
  EXPECT_EQ(plan.assignment.row(0)[0], 1.0);
  EXPECT_NEAR(plan.em_cost, 0.7, 1e-12);
}

TEST(SolveEmPlusL, CoincidentSForcedUniform) {
  // S members share a location, so the Lipschitz rows force one common row,
  // and eps = 0 makes that row U_T.
  const MetricSpace space = on_line({0.0, 0.0, 0.0, 0.2, 0.5, 1.1});
  const IndexSet s{0, 1, 2}, t{3, 4, 5};
  for (ProbMetricKind kind : {kTv, kInf}) {
    const AaPlan plan = solve_em_plus_l(space, s, t, 0.0, kind);
    double want = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_NEAR(plan.assignment.row(i)[j], 1.0 / 3.0, 1e-9);
        want += space(s[i], t[j]) / 9.0;
      }
    }
    EXPECT_NEAR(plan.em_cost, want, 1e-9);
  }
}

TEST(SolveEmPlusL, TwoByTwoMatchesVertexOracle) {
  const MetricSpace space = on_line({0.0, 0.3, 0.5, 1.4});
  const IndexSet s{0, 1}, t{2, 3};
  const double eps = 0.1;
  // Independent formulation: mu(i, j) at 2 i + j, then q+(j), q-(j). With two
  // outcomes the TV condition is |mu(0, 0) - mu(1, 0)| <= d.
  lp::LinearProgram p;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      p.add_variable(0.5 * space(s[i], t[j]), lp::Bound{0.0, 1.0});
    }
  }
  for (int v = 0; v < 4; ++v) p.add_variable(0.0, lp::Bound{0.0, 1.0});
  p.add_constraint({{0, 1.0}, {1, 1.0}}, lp::Relation::kEqual, 1.0);
  p.add_constraint({{2, 1.0}, {3, 1.0}}, lp::Relation::kEqual, 1.0);
  for (std::size_t j = 0; j < 2; ++j) {
    p.add_constraint({{j, 0.5}, {2 + j, 0.5}, {4 + 2 * j, -1.0}, {5 + 2 * j, 1.0}},
                     lp::Relation::kEqual, 0.5);
  }
  p.add_constraint({{4, 0.5}, {5, 0.5}, {6, 0.5}, {7, 0.5}}, lp::Relation::kLessEqual, eps);
  p.add_constraint({{0, 1.0}, {2, -1.0}}, lp::Relation::kLessEqual, space(0, 1));
  p.add_constraint({{0, -1.0}, {2, 1.0}}, lp::Relation::kLessEqual, space(0, 1));
  const auto oracle = testing::vertex_oracle(p);
  ASSERT_TRUE(oracle.has_value());
  const AaPlan plan = solve_em_plus_l(space, s, t, eps);
  EXPECT_NEAR(plan.em_cost, oracle->value, 1e-9);
}

TEST(SolveEmPlusL, NegativeEpsIsInfeasible) {
  const MetricSpace space = on_line({0.0, 0.3, 0.5, 1.4});
  const IndexSet s{0, 1}, t{2, 3};
  try {
    solve_em_plus_l(space, s, t, -0.05);
    FAIL() << "expected InfeasibleParity";
  } catch (const InfeasibleParity& e) {
    EXPECT_EQ(e.requested_eps(), -0.05);
    EXPECT_NEAR(e.min_eps(), 0.0, 1e-12);
  }
}

TEST(SolveEmPlusL, GroupChecks) {
  const MetricSpace space = on_line({0.0, 0.3, 0.5});
  EXPECT_THROW(solve_em_plus_l(space, IndexSet{0, 1}, IndexSet{1, 2}, 0.1), InvalidArgument);
  EXPECT_THROW(solve_em_plus_l(space, IndexSet{0}, IndexSet{}, 0.1), InvalidArgument);
  EXPECT_THROW(solve_em_plus_l(space, IndexSet{0}, IndexSet{7}, 0.1), InvalidArgument);
  const AaPlan empty = solve_em_plus_l(space, IndexSet{}, IndexSet{0, 1}, 0.1);
  EXPECT_EQ(empty.assignment.size(), 0u);
  EXPECT_EQ(empty.em_cost, 0.0);
}

TEST(ReweightLoss, Examples) {
  const MetricSpace space = on_line({0.0, 0.5, 1.0});
  const FairnessInstance inst(space, {"a", "b"}, Matrix{{0.1, 0.2}, {0.3, 0.4}, {0.5, 0.6}});
  // S = {0}, T = {1}: L'(1, a) = L(0, a) + L(1, a).
  AaPlan single{StochasticMap(Matrix{{1.0}}), 0.5, 0.0, kTv};
  const FairnessInstance pair(space.subspace(IndexSet{0, 1}), {"a", "b"},
                              Matrix{{0.1, 0.2}, {0.3, 0.4}});
  Matrix l = reweight_loss(single, pair, IndexSet{0}, IndexSet{1});
  EXPECT_NEAR(l(0, 0), 0.4, 1e-15);
  EXPECT_NEAR(l(0, 1), 0.6, 1e-15);

  // S = {0}, T = {1, 2}, all mass to 1: row for 2 untouched.
  AaPlan to_first{StochasticMap(Matrix{{1.0, 0.0}}), 0.5, 0.0, kTv};
  l = reweight_loss(to_first, inst, IndexSet{0}, IndexSet{1, 2});
  EXPECT_NEAR(l(1, 0), 0.5, 1e-15);
  EXPECT_NEAR(l(1, 1), 0.6, 1e-15);

  // Uniform plan: each T member gets half of L(0, .).
  AaPlan uniform{StochasticMap(Matrix{{0.5, 0.5}}), 0.75, 0.0, kTv};
  l = reweight_loss(uniform, inst, IndexSet{0}, IndexSet{1, 2});
  EXPECT_NEAR(l(0, 0), 0.35, 1e-15);
  EXPECT_NEAR(l(1, 1), 0.7, 1e-15);
  l = reweight_loss(uniform, inst, IndexSet{0}, IndexSet{1, 2}, /*reweight=*/false);
  EXPECT_NEAR(l(0, 0), 0.3, 1e-15);
}

TEST(RunAffirmativeAction, SinglePairSharesArgmin) {
  const FairnessInstance inst(on_line({0.0, 0.4}), {"a", "b"}, Matrix{{0.9, 0.0}, {0.2, 0.5}});
  // L'(1, .) = (1.1, 0.5): both individuals receive outcome b.
  const ComposedMap c = run_affirmative_action(inst, IndexSet{0}, IndexSet{1}, 0.0);
  for (std::size_t x = 0; x < 2; ++x) EXPECT_EQ(c.map.row(x)[1], 1.0);
  const ComposedReport r = evaluate_composed(c, inst.space(), IndexSet{0}, IndexSet{1});
  EXPECT_EQ(r.cross_average_violation, -0.4);
  EXPECT_TRUE(r.ok());
}

TEST(RunAffirmativeAction, EmptySReducesToFairnessOnT) {
  Rng rng(4401);
  for (int i = 0; i < 10; ++i) {
    const std::size_t n = testing::pick(rng, 1, 6);
    const MetricSpace space = testing::random_true_metric(rng, n, 1.0);
    const FairnessInstance inst(space, default_ids(3), testing::random_loss(rng, n, 3));
    IndexSet t(n);
    std::iota(t.begin(), t.end(), 0);
    for (ProbMetricKind kind : {kTv, kInf}) {
      const ComposedMap c = run_affirmative_action(inst, IndexSet{}, t, 1.0, {kind, true});
      const StochasticMap direct = solve_fairness(inst, kind).map;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t a = 0; a < 3; ++a) {
          EXPECT_NEAR(c.map.row(x)[a], direct.row(x)[a], 1e-8);
        }
      }
    }
  }
}

TEST(RunAffirmativeAction, RequiresPartition) {
  const FairnessInstance inst(on_line({0.0, 0.4, 0.8}), {"a", "b"},
                              Matrix{{0, 1}, {1, 0}, {0, 1}});
  EXPECT_THROW(run_affirmative_action(inst, IndexSet{0}, IndexSet{1}, 0.1), InvalidArgument);
}

// Two clusters on a line: G0 near 0 prefers ad0, G1 near 1 prefers ad1. S is
// mostly G0 and T mostly G1, so the plain fairness LP separates S from T.
struct TwoClusters {
  FairnessInstance inst;
  IndexSet s, t;
};

TwoClusters two_clusters() {
  std::vector<double> xs;
  Matrix loss(20, 2);
  IndexSet s, t;
  // Layout: S0 = 0..3, S1 = 4, T0 = 5..8, T1 = 9..19.
  for (std::size_t i = 0; i < 20; ++i) {
    const bool g0 = i < 4 || (i >= 5 && i < 9);
    xs.push_back(g0 ? 0.02 * static_cast<double>(i % 5) : 0.9 + 0.01 * static_cast<double>(i % 7));
    loss(i, 0) = g0 ? 0.0 : 1.0;
    loss(i, 1) = g0 ? 1.0 : 0.0;
    (i < 5 ? s : t).push_back(i);
  }
  return TwoClusters{FairnessInstance(on_line(xs), {"ad0", "ad1"}, std::move(loss)), s, t};
}

TEST(RunAffirmativeAction, TwoClusterScenario) {
  const TwoClusters f = two_clusters();
  const double eps = 0.1;
  const GroupDistribution gs = GroupDistribution::uniform_over(20, f.s);
  const GroupDistribution gt = GroupDistribution::uniform_over(20, f.t);
  const StochasticMap plain = solve_fairness(f.inst, kTv).map;
  EXPECT_GT(parity_gap(plain, gs, gt), 0.4);

  for (ProbMetricKind kind : {kTv, kInf}) {
    const ComposedMap c = run_affirmative_action(f.inst, f.s, f.t, eps, {kind, true});
    const ComposedReport r = evaluate_composed(c, f.inst.space(), f.s, f.t);
    EXPECT_LE(r.parity_gap, eps + 1e-6);
    EXPECT_LE(r.within_s_violation, 1e-6);
    EXPECT_LE(r.within_t_violation, 1e-6);
    EXPECT_LE(r.cross_average_violation, c.plan.em_cost + 1e-6);
    EXPECT_TRUE(r.ok());
  }
}

TEST(EvaluateComposed, ConstantMap) {
  const MetricSpace space = on_line({0.0, 0.3, 0.6, 1.0});
  const IndexSet s{0, 1}, t{2, 3};
  AaPlan plan = solve_em_plus_l(space, s, t, 0.0);
  const StochasticMap constant = StochasticMap::constant(4, OutcomeDistribution({0.4, 0.6}));
  const ComposedMap c{constant, StochasticMap::constant(2, OutcomeDistribution({0.4, 0.6})),
                      std::move(plan)};
  const ComposedReport r = evaluate_composed(c, space, s, t);
  EXPECT_NEAR(r.parity_gap, 0.0, 1e-15);
  EXPECT_LE(r.within_s_violation, 0.0);
  EXPECT_LE(r.within_t_violation, 0.0);
  EXPECT_LE(r.cross_average_violation, 0.0);
  EXPECT_TRUE(r.ok());
}

TEST(AffirmativeProperty, RandomSixIndividualInstances) {
  Rng rng(4402);
  for (int i = 0; i < 30; ++i) {
    const MetricSpace space = testing::random_true_metric(rng, 6, 1.2);
    const FairnessInstance inst(space, default_ids(3), testing::random_loss(rng, 6, 3));
    IndexSet s, t;
    testing::random_partition(rng, 6, s, t);
    const double eps = testing::uniform(rng, 0.0, 0.3);
    const ProbMetricKind kind = i % 2 ? kTv : kInf;
    const ComposedMap c = run_affirmative_action(inst, s, t, eps, {kind, i % 3 != 0});
    const ComposedReport r = evaluate_composed(c, space, s, t);
    EXPECT_TRUE(r.ok()) << "instance " << i << ": parity " << r.parity_gap << " within "
                        << r.within_s_violation << "/" << r.within_t_violation << " cross "
                        << r.cross_average_violation << " em " << c.plan.em_cost;
  }
}

}  // namespace
}  // namespace fairlip
