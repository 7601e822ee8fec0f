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

#include <random>

#include <benchmark/benchmark.h>

#include "fairlip/fairlip.hpp"

namespace fairlip {
namespace {

MetricSpace random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.5);
  std::vector<std::vector<double>> pts(n, std::vector<double>(2));
  for (auto& p : pts) {
    for (double& c : p) c = u(rng);
  }
  return MetricSpace::euclidean(pts);
}

FairnessInstance random_instance(std::size_t n, std::size_t k) {
  std::mt19937_64 rng(n * 31 + k);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Matrix loss(n, k);
  for (std::size_t x = 0; x < n; ++x) {
    for (double& v : loss.row(x)) v = u(rng);
  }
  return FairnessInstance(random_points(n, n), default_ids(k), std::move(loss));
}

void BM_SolveFairnessTv(benchmark::State& state) {
  const FairnessInstance inst = random_instance(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_fairness(inst, ProbMetricKind::kTotalVariation));
  }
}
BENCHMARK(BM_SolveFairnessTv)->Arg(4)->Arg(8)->Arg(12)->Arg(20);

void BM_SolveFairnessInf(benchmark::State& state) {
  const FairnessInstance inst = random_instance(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_fairness(inst, ProbMetricKind::kRelativeLinf));
  }
}
BENCHMARK(BM_SolveFairnessInf)->Arg(4)->Arg(8)->Arg(12)->Arg(20);

void BM_PivotRule(benchmark::State& state) {
  const FairnessInstance inst = random_instance(12, 3);
  const lp::LinearProgram program = build_fairness_lp(inst, ProbMetricKind::kTotalVariation);
  lp::SolveOptions options;
  options.rule = state.range(0) ? lp::PivotRule::kDantzigThenBland : lp::PivotRule::kBland;
  for (auto _ : state) benchmark::DoNotOptimize(lp::solve(program, options));
}
BENCHMARK(BM_PivotRule)->Arg(0)->Arg(1);

void BM_Earthmover(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const MetricSpace space = random_points(n, 7).verified();
  std::vector<double> w(n, 0.0);
  w[0] = 1.0;
  const GroupDistribution s = GroupDistribution::uniform(n);
  const GroupDistribution t(std::move(w));
  const auto form = state.range(1) ? EarthmoverForm::kMetricSimplified : EarthmoverForm::kGeneral;
  for (auto _ : state) benchmark::DoNotOptimize(earthmover(space, s, t, form));
}
BENCHMARK(BM_Earthmover)->Args({8, 0})->Args({8, 1})->Args({16, 0})->Args({16, 1});

void BM_ExpMechanismGrid(benchmark::State& state) {
  const MetricSpace grid = lattice_grid(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const ExpMechMap m = exp_mechanism(grid);
    benchmark::DoNotOptimize(expected_loss(m, grid));
  }
}
BENCHMARK(BM_ExpMechanismGrid)->Arg(8)->Arg(16)->Arg(32);

}  // namespace
}  // namespace fairlip

BENCHMARK_MAIN();
