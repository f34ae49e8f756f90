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

#include "metricfix/set_valued_map.h"

#include <vector>

#include "gtest/gtest.h"
#include "metricfix/errors.h"
#include "metricfix/generators.h"

namespace metricfix {
namespace {

FiniteMetricSpace Triangle() {
  return FiniteMetricSpace::FromRows(
      {"a", "b", "c"}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

SetValuedMap Rotation() {
  return SetValuedMap::FromFunction(Triangle(),
                                    [](PointIndex i) { return (i + 1) % 3; });
}

TEST(SetValuedMapTest, Construction) {
  const auto space = Triangle();
  EXPECT_THROW(SetValuedMap(space, {PointSet({0}, 3)}), InputError);
  EXPECT_THROW(SetValuedMap(space, {PointSet({0}, 3), PointSet({0}, 3),
                                    PointSet({0}, 4)}),
               InputError);
  const auto c = SetValuedMap::Constant(space, PointSet({1, 2}, 3));
  EXPECT_EQ(c.image(0), PointSet({1, 2}, 3));
  EXPECT_FALSE(c.singleton_valued());
  EXPECT_TRUE(Rotation().singleton_valued());
}

TEST(SetValuedMapTest, FixedPoints) {
  EXPECT_EQ(FixedPoints(SetValuedMap::Identity(Triangle())),
            (std::vector<PointIndex>{0, 1, 2}));
  EXPECT_TRUE(FixedPoints(Rotation()).empty());
  EXPECT_EQ(FixedPoints(DyadicHalvingMap(3)), std::vector<PointIndex>{0});
}

TEST(SetValuedMapTest, ComposeAppliesFirstThenSecond) {
  const auto space = Triangle();
  const auto to_b = SetValuedMap::Constant(space, PointSet({1}, 3));
  const auto g = Compose(to_b, Rotation());  // rotation after "to b"
  EXPECT_EQ(g.image(0), PointSet({2}, 3));
  const auto spread = SetValuedMap::Constant(space, PointSet({0, 1}, 3));
  EXPECT_EQ(Compose(spread, Rotation()).image(2), PointSet({1, 2}, 3));
  const auto other = SetValuedMap::Identity(
      FiniteMetricSpace::Line(std::vector<double>{0, 1, 2}));
  EXPECT_THROW(Compose(other, Rotation()), InputError);
}

TEST(SetValuedMapTest, Iterate) {
  EXPECT_EQ(Iterate(Rotation(), 3), SetValuedMap::Identity(Triangle()));
  EXPECT_EQ(Iterate(Rotation(), 1), Rotation());
  EXPECT_THROW(Iterate(Rotation(), 0), InputError);
}

TEST(PeriodicPointTest, Examples) {
  const auto fixed = FindPeriodicPoint(DyadicHalvingMap(2), 4);
  ASSERT_TRUE(fixed.has_value());
  EXPECT_EQ(fixed->period, 1);
  EXPECT_FALSE(FindPeriodicPoint(Rotation(), 2).has_value());
  const auto three = FindPeriodicPoint(Rotation(), 3);
  ASSERT_TRUE(three.has_value());
  EXPECT_EQ(three->period, 3);
  EXPECT_EQ(three->point, 0u);
  EXPECT_THROW(FindPeriodicPoint(Rotation(), 0), InputError);
}

TEST(PeriodicPointTest, TwoClusterSwap) {
  const auto f = TwoClusterSwapMap();
  EXPECT_TRUE(FixedPoints(f).empty());
  const auto p = FindPeriodicPoint(f, 5);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->period, 2);
  EXPECT_EQ(f.space().label(p->point), "1");
  EXPECT_EQ(FixedPoints(Iterate(f, 2)), (std::vector<PointIndex>{0, 3}));
}

}  // namespace
}  // namespace metricfix
