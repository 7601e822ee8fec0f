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

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "fairlip/error.hpp"

namespace fairlip {
namespace {

TEST(Matrix, RaggedRowsRejected) {
  EXPECT_THROW(Matrix::FromRows({{1.0, 2.0}, {3.0}}), InvalidArgument);
}

TEST(Matrix, RoundTripRows) {
  const Matrix m{{1.0, 2.0}, {3.0, 4.0}};
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m(1, 0), 3.0);
  EXPECT_EQ(Matrix::FromRows(m.ToRows()), m);
}

TEST(MetricSpace, ValidatesShapeAndDiagonal) {
  EXPECT_THROW(MetricSpace({"a"}, Matrix{{0.0, 1.0}}), InvalidArgument);
  EXPECT_THROW(MetricSpace(Matrix{{1.0}}), InvalidArgument);
  EXPECT_THROW(MetricSpace(Matrix{{0.0, -1.0}, {-1.0, 0.0}}), InvalidArgument);
  EXPECT_THROW(MetricSpace(Matrix{{0.0, 1.0}, {2.0, 0.0}}), InvalidArgument);
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(MetricSpace(Matrix{{0.0, inf}, {inf, 0.0}}), InvalidArgument);
}

TEST(MetricSpace, TriangleCheck) {
  const MetricSpace bad(Matrix{{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
  EXPECT_FALSE(bad.is_true_metric());
  EXPECT_TRUE(bad.find_triangle_violation().has_value());
  EXPECT_FALSE(bad.verified().is_true_metric());
  const MetricSpace good(Matrix{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  EXPECT_TRUE(good.verified().is_true_metric());
}

TEST(MetricSpace, EuclideanIsFlaggedAndCorrect) {
  const MetricSpace s = MetricSpace::euclidean({{0.0, 0.0}, {3.0, 4.0}});
  EXPECT_TRUE(s.is_true_metric());
  EXPECT_DOUBLE_EQ(s(0, 1), 5.0);
  EXPECT_DOUBLE_EQ(s.max_distance(), 5.0);
}

TEST(MetricSpace, SubspaceAndScale) {
  const MetricSpace s =
      MetricSpace({"a", "b", "c"}, Matrix{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}).verified();
  const std::size_t idx[] = {2, 0};
  const MetricSpace sub = s.subspace(idx);
  EXPECT_EQ(sub.ids(), (std::vector<std::string>{"c", "a"}));
  EXPECT_EQ(sub(0, 1), 2.0);
  EXPECT_TRUE(sub.is_true_metric());
  EXPECT_EQ(s.scaled(10.0)(0, 2), 20.0);
  EXPECT_THROW(s.scaled(0.0), InvalidArgument);
}

TEST(Distributions, Validation) {
  EXPECT_THROW(OutcomeDistribution({0.5, 0.6}), InvalidArgument);
  EXPECT_THROW(OutcomeDistribution({1.5, -0.5}), InvalidArgument);
  EXPECT_THROW(OutcomeDistribution(std::vector<double>{}), InvalidArgument);
  EXPECT_NO_THROW(OutcomeDistribution({0.5, 0.5 + 1e-10}));
  EXPECT_EQ(OutcomeDistribution::point_mass(3, 1)[1], 1.0);
  EXPECT_THROW(StochasticMap(Matrix{{0.5, 0.4}}), InvalidArgument);
}

TEST(GroupDistribution, UniformOver) {
  const std::size_t members[] = {0, 2};
  const GroupDistribution g = GroupDistribution::uniform_over(4, members);
  EXPECT_EQ(g[0], 0.5);
  EXPECT_EQ(g[1], 0.0);
  EXPECT_EQ(g.support(), (IndexSet{0, 2}));
  const std::size_t dup[] = {1, 1};
  EXPECT_THROW(GroupDistribution::uniform_over(4, dup), InvalidArgument);
  EXPECT_THROW(GroupDistribution::uniform_over(4, {}), InvalidArgument);
}

TEST(FairnessInstance, ShapeChecks) {
  const MetricSpace s(Matrix{{0, 1}, {1, 0}});
  EXPECT_THROW(FairnessInstance(s, {"a"}, Matrix{{0.0, 1.0}, {1.0, 0.0}}),
               InvalidArgument);
  EXPECT_THROW(FairnessInstance(s, {"a", "b"}, Matrix{{0.0, 1.0}, {1.0, 0.0}},
                                GroupDistribution::uniform(3)),
               InvalidArgument);
  const FairnessInstance ok(s, {"a", "b"}, Matrix{{0.0, 1.0}, {1.0, 0.0}});
  EXPECT_EQ(ok.base()[0], 0.5);
}

}  // namespace
}  // namespace fairlip
