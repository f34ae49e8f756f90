// Copyright 2026 The metricfix Authors
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

#include "metricfix/solver.h"

#include <vector>

#include "gtest/gtest.h"
#include "metricfix/derived_metric.h"
#include "metricfix/errors.h"
#include "metricfix/generators.h"

namespace metricfix {
namespace {

TEST(SolverTest, StartAtFixedPoint) {
  const auto f = DyadicHalvingMap(3);
  const auto trace = SolveFixedPoint(f, MetricView(f.space()), 0, 10);
  EXPECT_EQ(trace.outcome, SolveOutcome::kFixedPoint);
  EXPECT_EQ(trace.steps(), 0u);
  EXPECT_EQ(trace.fixed_point, 0u);
  EXPECT_EQ(trace.gaps, (std::vector<MaybeDistance>{0.0}));
}

TEST(SolverTest, HalvingWalksDownTheGrid) {
  const auto f = DyadicHalvingMap(3);
  const auto trace = SolveFixedPoint(f, MetricView(f.space()), 3, 10);
  EXPECT_EQ(trace.outcome, SolveOutcome::kFixedPoint);
  EXPECT_EQ(trace.iterates, (std::vector<PointIndex>{3, 2, 1, 0}));
  EXPECT_EQ(trace.gaps,
            (std::vector<MaybeDistance>{0.5, 0.25, 0.125, 0.0}));
  EXPECT_EQ(SolveOutcomeName(trace.outcome), "fixed-point");
}

TEST(SolverTest, RoundedDownHalvingOnQuarterGrid) {
  // {0, 1/4, 1/2, 3/4, 1} with x -> x/2 rounded down to the grid.
  const auto space =
      FiniteMetricSpace::Line(std::vector<double>{0, 0.25, 0.5, 0.75, 1});
  const auto f = SetValuedMap::FromFunction(
      space, [](PointIndex i) -> PointIndex { return i / 2; });
  const auto trace = SolveFixedPoint(f, MetricView(space), 4, 10);
  EXPECT_EQ(trace.iterates, (std::vector<PointIndex>{4, 2, 1, 0}));
  EXPECT_EQ(trace.steps(), 3u);
}

TEST(SolverTest, CycleAndBudget) {
  const auto space = FiniteMetricSpace::FromRows(
      {"a", "b", "c"}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  const auto rot = SetValuedMap::FromFunction(
      space, [](PointIndex i) { return (i + 1) % 3; });
  const auto trace = SolveFixedPoint(rot, MetricView(space), 0, 10);
  EXPECT_EQ(trace.outcome, SolveOutcome::kCycle);
  EXPECT_EQ(trace.iterates, (std::vector<PointIndex>{0, 1, 2, 0}));
  EXPECT_EQ(trace.cycle_start, 0u);
  const auto short_run = SolveFixedPoint(rot, MetricView(space), 0, 1);
  EXPECT_EQ(short_run.outcome, SolveOutcome::kMaxIterations);
  EXPECT_EQ(short_run.steps(), 1u);
  EXPECT_THROW(SolveFixedPoint(rot, MetricView(space), 0, 0), InputError);
  EXPECT_THROW(SolveFixedPoint(rot, MetricView(space), 3, 5), InputError);
}

TEST(SolverTest, NearestImageWithLowestIndexTies) {
  const auto space =
      FiniteMetricSpace::Line(std::vector<double>{0, 1, 2, 3, 4});
  // From 2, both 1 and 3 are at distance 1; 1 wins.
  const auto f = SetValuedMap::Constant(space, PointSet({0, 1, 3}, 5));
  const auto trace = SolveFixedPoint(f, MetricView(space), 2, 5);
  EXPECT_EQ(trace.iterates, (std::vector<PointIndex>{2, 1}));
  EXPECT_EQ(trace.outcome, SolveOutcome::kFixedPoint);
}

TEST(SolverTest, PrefersReachableImagesUnderDerivedView) {
  const auto space = FiniteMetricSpace::Line(std::vector<double>{0, 1, 10});
  const DerivedMetric chain = ChainMetric(space, 2.0);
  const auto f = SetValuedMap::Constant(space, PointSet({1, 2}, 3));
  const auto trace = SolveFixedPoint(f, MetricView(chain), 2, 5);
  EXPECT_EQ(trace.outcome, SolveOutcome::kFixedPoint);
  EXPECT_EQ(trace.steps(), 0u);
  const auto from0 = SolveFixedPoint(f, MetricView(chain), 0, 5);
  EXPECT_EQ(from0.iterates, (std::vector<PointIndex>{0, 1}));
}

}  // namespace
}  // namespace metricfix
