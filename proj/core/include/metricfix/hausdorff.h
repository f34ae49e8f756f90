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

#ifndef METRICFIX_HAUSDORFF_H_
#define METRICFIX_HAUSDORFF_H_

#include <optional>
#include <string>
#include <variant>

#include "metricfix/derived_metric.h"
#include "metricfix/metric_space.h"

namespace metricfix {

// A distance that may be unreachable (std::nullopt).
using MaybeDistance = std::optional<double>;

// Non-owning lookup over a base space or a derived metric. The source must
// outlive the view.
class MetricView {
 public:
  explicit MetricView(const FiniteMetricSpace& base) : source_(&base) {}
  explicit MetricView(const DerivedMetric& derived) : source_(&derived) {}

  MaybeDistance operator()(PointIndex i, PointIndex j) const {
    if (const auto* base = std::get_if<const FiniteMetricSpace*>(&source_)) {
      return (*base)->distance(i, j);
    }
    return std::get<const DerivedMetric*>(source_)->distance(i, j);
  }

  std::size_t size() const { return space().size(); }
  const FiniteMetricSpace& space() const;
  // "base", "chain:<r>" or "path:<eps>".
  std::string Describe() const;

 private:
  std::variant<const FiniteMetricSpace*, const DerivedMetric*> source_;
};

// min over a in A of m(a, y); unreachable when no member is reachable.
MaybeDistance SetDistance(PointIndex y, const PointSet& set,
                          const MetricView& m);

// max of the two directed sup-inf distances. Unreachable as soon as one
// member has no reachable partner in the other set.
MaybeDistance HausdorffDistance(const PointSet& a, const PointSet& b,
                                const MetricView& m);

// Smallest candidate r in {0} union {m(a, b)} such that each set lies in
// the closed r-expansion {z : m(x, z) <= r for some x} of the other. Agrees exactly with
// HausdorffDistance.
MaybeDistance HausdorffViaExpansion(const PointSet& a, const PointSet& b,
                                    const MetricView& m);

}  // namespace metricfix

#endif  // METRICFIX_HAUSDORFF_H_
