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

#include "metricfix/hausdorff.h"

#include <algorithm>
#include <vector>

#include "metricfix/errors.h"

namespace metricfix {

const FiniteMetricSpace& MetricView::space() const {
  if (const auto* base = std::get_if<const FiniteMetricSpace*>(&source_)) {
    return **base;
  }
  return std::get<const DerivedMetric*>(source_)->base();
}

std::string MetricView::Describe() const {
  if (std::holds_alternative<const FiniteMetricSpace*>(source_)) return "base";
  const DerivedMetric& d = *std::get<const DerivedMetric*>(source_);
  return std::string(d.kind() == DerivedKind::kChain ? "chain:" : "path:") +
         FormatReal(d.scale());
}

namespace {

void CheckUniverse(const PointSet& set, const MetricView& m) {
  if (set.universe() != m.size()) {
    throw InputError("point set does not belong to the metric's space");
  }
}

// sup over a in `from` of d(a, to); nullopt if some a reaches nothing.
MaybeDistance DirectedSup(const PointSet& from, const PointSet& to,
                          const MetricView& m) {
  double sup = 0.0;
  for (PointIndex a : from) {
    const MaybeDistance d = SetDistance(a, to, m);
    if (!d) return std::nullopt;
    sup = std::max(sup, *d);
  }
  return sup;
}

bool InsideExpansion(const PointSet& inner, const PointSet& around, double r,
                     const MetricView& m) {
  for (PointIndex a : inner) {
    bool covered = false;
    for (PointIndex b : around) {
      const MaybeDistance d = m(b, a);
      if (d && *d <= r) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace

MaybeDistance SetDistance(PointIndex y, const PointSet& set,
                          const MetricView& m) {
  CheckUniverse(set, m);
  MaybeDistance best;
  for (PointIndex a : set) {
    const MaybeDistance d = m(a, y);
    if (d && (!best || *d < *best)) best = d;
  }
  return best;
}

MaybeDistance HausdorffDistance(const PointSet& a, const PointSet& b,
                                const MetricView& m) {
  if (a == b) {
    CheckUniverse(a, m);
    return 0.0;
  }
  const MaybeDistance ab = DirectedSup(a, b, m);
  if (!ab) return std::nullopt;
  const MaybeDistance ba = DirectedSup(b, a, m);
  if (!ba) return std::nullopt;
  return std::max(*ab, *ba);
}

MaybeDistance HausdorffViaExpansion(const PointSet& a, const PointSet& b,
                                    const MetricView& m) {
  CheckUniverse(a, m);
  CheckUniverse(b, m);
  std::vector<double> candidates = {0.0};
  for (PointIndex x : a) {
    for (PointIndex y : b) {
      if (const MaybeDistance d = m(x, y)) candidates.push_back(*d);
      if (const MaybeDistance d = m(y, x)) candidates.push_back(*d);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  auto covers = [&](double r) {
    return InsideExpansion(a, b, r, m) && InsideExpansion(b, a, r, m);
  };
  if (!covers(candidates.back())) return std::nullopt;
  // Containment is monotone in r; binary search the first covering value.
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (covers(candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return candidates[lo];
}

}  // namespace metricfix
