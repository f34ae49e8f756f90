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

#ifndef METRICFIX_DERIVED_METRIC_H_
#define METRICFIX_DERIVED_METRIC_H_

#include <optional>
#include <vector>

#include "metricfix/limits.h"
#include "metricfix/metric_space.h"

namespace metricfix {

enum class DerivedKind { kChain, kPath };

// A distance table derived from a base space at a scale: the infimal
// length of chains (kChain) or polygonal paths (kPath) whose hops are all
// strictly shorter than the scale. Pairs in different components at that
// scale are unreachable.
//
// Entry (i, j) is the left-to-right floating-point sum of hop lengths along
// the best route starting at i, so the table can differ from its transpose
// in the last bit.
class DerivedMetric {
 public:
  DerivedKind kind() const { return kind_; }
  double scale() const { return scale_; }
  std::size_t size() const { return base_.size(); }
  const FiniteMetricSpace& base() const { return base_; }
  const Partition& components() const { return components_; }

  bool reachable(PointIndex i, PointIndex j) const {
    return components_.class_of[i] == components_.class_of[j];
  }
  std::optional<double> distance(PointIndex i, PointIndex j) const;

 private:
  DerivedMetric(FiniteMetricSpace base, DerivedKind kind, double scale,
                std::vector<double> table, Partition components);
  friend DerivedMetric ChainMetric(const FiniteMetricSpace&, double,
                                   const Limits&);
  friend DerivedMetric PathMetric(const FiniteMetricSpace&, double,
                                  const Limits&);

  FiniteMetricSpace base_;
  DerivedKind kind_;
  double scale_;
  std::vector<double> table_;  // row-major; infinity where unreachable
  Partition components_;
};

// Chain metric at scale r, computed by extending chains one hop at a time
// until no chain improves (label-correcting search from every source).
DerivedMetric ChainMetric(const FiniteMetricSpace& space, double r,
                          const Limits& limits = Limits());

// Intrinsic path metric at scale eps, computed with Dijkstra's algorithm on
// the graph of hops shorter than eps.
DerivedMetric PathMetric(const FiniteMetricSpace& space, double eps,
                         const Limits& limits = Limits());

// A polygonal path through waypoints with parameters 0 = t_0 < ... < t_k = 1.
// A single-waypoint (constant) path has the single parameter 0.
class DiscretePath {
 public:
  // Uniform parameters i / k.
  explicit DiscretePath(std::vector<PointIndex> waypoints);
  DiscretePath(std::vector<PointIndex> waypoints, std::vector<double> params);

  const std::vector<PointIndex>& waypoints() const { return waypoints_; }
  const std::vector<double>& params() const { return params_; }
  std::size_t size() const { return waypoints_.size(); }

  friend bool operator==(const DiscretePath&, const DiscretePath&) = default;

 private:
  std::vector<PointIndex> waypoints_;
  std::vector<double> params_;
};

struct ParamRange {
  double a;
  double b;
};

// Sum of consecutive hop lengths, restricted to waypoints whose parameter
// lies in `sub` when given. Sub-range endpoints must coincide with waypoint
// parameters.
double PathLength(const FiniteMetricSpace& space, const DiscretePath& path,
                  std::optional<ParamRange> sub = std::nullopt);

// Reassigns parameters to cumulative-length fractions. Throws InputError
// for a zero-length path.
DiscretePath Reparametrize(const FiniteMetricSpace& space,
                           const DiscretePath& path);

// Shortest path from x to y in the eps-graph; among equally short paths the
// lexicographically smallest waypoint sequence. Its PathLength equals the
// PathMetric entry (x, y) bit for bit. Throws NoPathError when y is not
// reachable from x.
DiscretePath Geodesic(const FiniteMetricSpace& space, double eps,
                      PointIndex x, PointIndex y);

}  // namespace metricfix

#endif  // METRICFIX_DERIVED_METRIC_H_
