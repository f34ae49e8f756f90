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

#ifndef METRICFIX_SET_VALUED_MAP_H_
#define METRICFIX_SET_VALUED_MAP_H_

#include <functional>
#include <optional>
#include <vector>

#include "metricfix/metric_space.h"

namespace metricfix {

// F : X -> nonempty subsets of X on a finite space.
class SetValuedMap {
 public:
  // One image per point of `space`; throws InputError on a count mismatch or
  // an image drawn from a different universe.
  SetValuedMap(FiniteMetricSpace space, std::vector<PointSet> images);

  static SetValuedMap Identity(const FiniteMetricSpace& space);
  static SetValuedMap Constant(const FiniteMetricSpace& space,
                               const PointSet& value);
  // Singleton-valued map x -> {f(x)}.
  static SetValuedMap FromFunction(
      const FiniteMetricSpace& space,
      const std::function<PointIndex(PointIndex)>& f);

  const FiniteMetricSpace& space() const { return space_; }
  std::size_t size() const { return images_.size(); }
  const PointSet& image(PointIndex x) const { return images_[x]; }
  const std::vector<PointSet>& images() const { return images_; }
  bool singleton_valued() const;

  friend bool operator==(const SetValuedMap& a, const SetValuedMap& b) {
    return a.images_ == b.images_ && a.space_ == b.space_;
  }

 private:
  FiniteMetricSpace space_;
  std::vector<PointSet> images_;
};

// (second o first)(x) = union of second(y) over y in first(x).
SetValuedMap Compose(const SetValuedMap& first, const SetValuedMap& second);

// n-fold self-composition, n >= 1.
SetValuedMap Iterate(const SetValuedMap& f, int n);

// Every x with x in F(x), ascending. Empty when there is none.
std::vector<PointIndex> FixedPoints(const SetValuedMap& f);

struct PeriodicPoint {
  PointIndex point;
  int period;
};

// Smallest l <= max_period with a point x in F^(l)(x); the lowest such x.
std::optional<PeriodicPoint> FindPeriodicPoint(const SetValuedMap& f,
                                               int max_period);

}  // namespace metricfix

#endif  // METRICFIX_SET_VALUED_MAP_H_
