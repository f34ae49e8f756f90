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

#ifndef METRICFIX_SOLVER_H_
#define METRICFIX_SOLVER_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "metricfix/hausdorff.h"
#include "metricfix/set_valued_map.h"

namespace metricfix {

enum class SolveOutcome { kFixedPoint, kMaxIterations, kCycle };

std::string_view SolveOutcomeName(SolveOutcome outcome);

struct SolveTrace {
  std::vector<PointIndex> iterates;  // x_0 .. x_k, x_{n+1} in F(x_n)
  std::vector<MaybeDistance> gaps;   // m-distance from x_n to F(x_n)
  SolveOutcome outcome = SolveOutcome::kMaxIterations;
  std::optional<PointIndex> fixed_point;
  // Position in `iterates` of the first visit to the repeated state; the
  // repeated state itself is the last iterate.
  std::optional<std::size_t> cycle_start;

  std::size_t steps() const { return iterates.size() - 1; }
};

// Greedy minimizing sequence: x_{n+1} is the member of F(x_n) nearest to x_n
// under m (lowest index on ties; unreachable members are used only when no
// member is reachable). Stops at x_n in F(x_n), at the first revisited
// state, or after max_iter steps.
SolveTrace SolveFixedPoint(const SetValuedMap& f, const MetricView& m,
                           PointIndex x0, std::size_t max_iter);

}  // namespace metricfix

#endif  // METRICFIX_SOLVER_H_
