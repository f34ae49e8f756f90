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

#include <string>
#include <utility>

#include "metricfix/errors.h"

namespace metricfix {

SetValuedMap::SetValuedMap(FiniteMetricSpace space,
                           std::vector<PointSet> images)
    : space_(std::move(space)), images_(std::move(images)) {
  if (images_.size() != space_.size()) {
    throw InputError("map has " + std::to_string(images_.size()) +
                     " images for " + std::to_string(space_.size()) +
                     " points");
  }
  for (const PointSet& image : images_) {
    if (image.universe() != space_.size()) {
      throw InputError("image set drawn from a different space");
    }
  }
}

SetValuedMap SetValuedMap::Identity(const FiniteMetricSpace& space) {
  return FromFunction(space, [](PointIndex x) { return x; });
}

SetValuedMap SetValuedMap::Constant(const FiniteMetricSpace& space,
                                    const PointSet& value) {
  return SetValuedMap(space, std::vector<PointSet>(space.size(), value));
}

SetValuedMap SetValuedMap::FromFunction(
    const FiniteMetricSpace& space,
    const std::function<PointIndex(PointIndex)>& f) {
  std::vector<PointSet> images;
  images.reserve(space.size());
  for (PointIndex x = 0; x < space.size(); ++x) {
    images.push_back(PointSet::Singleton(f(x), space.size()));
  }
  return SetValuedMap(space, std::move(images));
}

bool SetValuedMap::singleton_valued() const {
  for (const PointSet& image : images_) {
    if (image.size() != 1) return false;
  }
  return true;
}

SetValuedMap Compose(const SetValuedMap& first, const SetValuedMap& second) {
  if (!(first.space() == second.space())) {
    throw InputError("composition needs maps on the same space");
  }
  const std::size_t n = first.size();
  std::vector<PointSet> images;
  images.reserve(n);
  std::vector<bool> mark(n, false);
  std::vector<PointIndex> members;
  for (PointIndex x = 0; x < n; ++x) {
    members.clear();
    for (PointIndex y : first.image(x)) {
      for (PointIndex z : second.image(y)) {
        if (!mark[z]) {
          mark[z] = true;
          members.push_back(z);
        }
      }
    }
    for (PointIndex z : members) mark[z] = false;
    images.emplace_back(members, n);
  }
  return SetValuedMap(first.space(), std::move(images));
}

SetValuedMap Iterate(const SetValuedMap& f, int n) {
  if (n < 1) throw InputError("iteration count must be at least 1");
  SetValuedMap result = f;
  for (int i = 1; i < n; ++i) result = Compose(result, f);
  return result;
}

std::vector<PointIndex> FixedPoints(const SetValuedMap& f) {
  std::vector<PointIndex> fixed;
  for (PointIndex x = 0; x < f.size(); ++x) {
    if (f.image(x).contains(x)) fixed.push_back(x);
  }
  return fixed;
}

std::optional<PeriodicPoint> FindPeriodicPoint(const SetValuedMap& f,
                                               int max_period) {
  if (max_period < 1) throw InputError("max period must be at least 1");
  SetValuedMap power = f;
  for (int period = 1; period <= max_period; ++period) {
    if (period > 1) power = Compose(power, f);
    const auto fixed = FixedPoints(power);
    if (!fixed.empty()) return PeriodicPoint{fixed.front(), period};
  }
  return std::nullopt;
}

}  // namespace metricfix
