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

#include "metricfix/expression.h"

#include <vector>

#include "gtest/gtest.h"
#include "metricfix/errors.h"

namespace metricfix {
namespace {

double Eval(const char* text, std::vector<double> x = {}) {
  return Expression::Parse(text, x.size()).Evaluate(x);
}

TEST(ExpressionTest, Precedence) {
  EXPECT_EQ(Eval("1 + 2 * 3"), 7.0);
  EXPECT_EQ(Eval("(1 + 2) * 3"), 9.0);
  EXPECT_EQ(Eval("8 - 3 - 2"), 3.0);
  EXPECT_EQ(Eval("8 / 4 / 2"), 1.0);
  EXPECT_EQ(Eval("2 ^ 3 ^ 2"), 512.0);
  EXPECT_EQ(Eval("-2 ^ 2"), -4.0);
  EXPECT_EQ(Eval("2 ^ -1"), 0.5);
  EXPECT_EQ(Eval("--3"), 3.0);
  EXPECT_EQ(Eval("2 * -3"), -6.0);
}

TEST(ExpressionTest, FunctionsAndVariables) {
  EXPECT_EQ(Eval("abs(x1 - x2)", {1, 4}), 3.0);
  EXPECT_EQ(Eval("min(x1, x2, 0.5)", {1, 4}), 0.5);
  EXPECT_EQ(Eval("max(x1, x2)", {1, 4}), 4.0);
  EXPECT_EQ(Eval("1.5e1"), 15.0);
}

TEST(ExpressionTest, QuadraticPayoff) {
  EXPECT_EQ(Eval("-(x1 - 0.25 - 0.5*x2)^2", {0.5, 0.5}), 0.0);
  EXPECT_EQ(Eval("1", {0.3, 0.7}), 1.0);
}

TEST(ExpressionTest, ParseErrors) {
  for (const char* bad : {"", "1 +", "(1", "1)", "x3", "x0", "foo(1)",
                          "min(1)", "abs(1, 2)", "1 2", "x", "1..2"}) {
    EXPECT_THROW(Expression::Parse(bad, 2), InputError) << bad;
  }
}

TEST(ExpressionTest, EvaluationErrors) {
  EXPECT_THROW(Eval("1 / x1", {0}), EvaluationError);
  EXPECT_THROW(Eval("(-1) ^ 0.5"), EvaluationError);
  EXPECT_THROW(Eval("10 ^ 400"), EvaluationError);
  const auto e = Expression::Parse("x1 + x2", 2);
  const std::vector<double> one = {1};
  EXPECT_THROW(e.Evaluate(one), InputError);
  EXPECT_EQ(e.text(), "x1 + x2");
}

}  // namespace
}  // namespace metricfix
