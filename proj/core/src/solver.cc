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

#include <string>

#include "metricfix/errors.h"

namespace metricfix {

std::string_view SolveOutcomeName(SolveOutcome outcome) {
  switch (outcome) {
    case SolveOutcome::kFixedPoint:
      return "fixed-point";
    case SolveOutcome::kMaxIterations:
      return "max-iter";
    case SolveOutcome::kCycle:
      return "cycle";
  }
  return "max-iter";
}

namespace {

PointIndex NearestImage(const SetValuedMap& f, const MetricView& m,
                        PointIndex x) {
  const PointSet& image = f.image(x);
  PointIndex best = image.front();
  MaybeDistance best_d;
  for (PointIndex y : image) {
    const MaybeDistance d = m(x, y);
    if (d && (!best_d || *d < *best_d)) {
      best = y;
      best_d = d;
    }
  }
  return best;
}

}  // namespace

SolveTrace SolveFixedPoint(const SetValuedMap& f, const MetricView& m,
                           PointIndex x0, std::size_t max_iter) {
  if (max_iter < 1) throw InputError("max_iter must be at least 1");
  if (x0 >= f.size()) {
    throw InputError("start point " + std::to_string(x0) + " out of range");
  }
  if (f.size() != m.size()) {
    throw InputError("metric view and map live on different spaces");
  }
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> first_visit(f.size(), kUnvisited);
  SolveTrace trace;
  PointIndex x = x0;
  while (true) {
    first_visit[x] = trace.iterates.size();
    trace.iterates.push_back(x);
    trace.gaps.push_back(SetDistance(x, f.image(x), m));
    if (f.image(x).contains(x)) {
      trace.outcome = SolveOutcome::kFixedPoint;
      trace.fixed_point = x;
      return trace;
    }
    if (trace.steps() >= max_iter) {
      trace.outcome = SolveOutcome::kMaxIterations;
      return trace;
    }
    const PointIndex next = NearestImage(f, m, x);
    if (first_visit[next] != kUnvisited) {
      trace.iterates.push_back(next);
      trace.gaps.push_back(SetDistance(next, f.image(next), m));
      trace.outcome = SolveOutcome::kCycle;
      trace.cycle_start = first_visit[next];
      return trace;
    }
    x = next;
  }
}

}  // namespace metricfix
