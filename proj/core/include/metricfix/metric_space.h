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

#ifndef METRICFIX_METRIC_SPACE_H_
#define METRICFIX_METRIC_SPACE_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metricfix/limits.h"

namespace metricfix {

using PointIndex = std::size_t;

inline constexpr double kDefaultTriangleTolerance = 1e-9;

// How per-factor distances combine into a distance on a product space.
enum class Combiner { kMax, kSum, kEuclidean };

std::string_view CombinerName(Combiner combiner);
std::optional<Combiner> ParseCombiner(std::string_view name);
double Combine(Combiner combiner, std::span<const double> factor_distances);

// Mixed-radix indexing of a Cartesian product; the last factor varies
// fastest.
class ProductShape {
 public:
  ProductShape() = default;
  explicit ProductShape(std::vector<std::size_t> sizes);

  std::size_t num_factors() const { return sizes_.size(); }
  std::size_t size(std::size_t factor) const { return sizes_[factor]; }
  const std::vector<std::size_t>& sizes() const { return sizes_; }
  std::size_t total() const { return total_; }

  std::size_t Encode(std::span<const std::size_t> coordinates) const;
  std::vector<std::size_t> Decode(std::size_t index) const;
  std::size_t Coordinate(std::size_t index, std::size_t factor) const {
    return (index / strides_[factor]) % sizes_[factor];
  }
  // Index obtained by replacing one coordinate of `index`.
  std::size_t WithCoordinate(std::size_t index, std::size_t factor,
                             std::size_t value) const;

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 1;
};

// A finite set of labeled points with a full pairwise distance table.
//
// Construction checks structure only (nonempty, square, finite entries,
// unique labels); axiom violations are reported by ValidateMetric. Values
// are immutable and share their storage, so copies are cheap.
class FiniteMetricSpace {
 public:
  // `distances` is row-major, size labels.size() squared.
  FiniteMetricSpace(std::vector<std::string> labels,
                    std::vector<double> distances);

  static FiniteMetricSpace FromRows(
      std::vector<std::string> labels,
      const std::vector<std::vector<double>>& rows);
  // Euclidean distances between the given coordinate rows.
  static FiniteMetricSpace FromEmbedding(
      std::vector<std::string> labels,
      const std::vector<std::vector<double>>& coords);
  // Points on the real line, labeled by their shortest round-trip decimal
  // representation.
  static FiniteMetricSpace Line(std::span<const double> coords);

  std::size_t size() const;
  double distance(PointIndex i, PointIndex j) const;
  const std::string& label(PointIndex i) const;
  const std::vector<std::string>& labels() const;
  std::optional<PointIndex> Find(std::string_view label) const;
  double Diameter() const;

  // Non-null for spaces built by ProductSpace with two or more factors;
  // their distances are combined from the factor tables on demand.
  const ProductShape* product_shape() const;
  const std::vector<FiniteMetricSpace>& factors() const;
  std::optional<Combiner> combiner() const;

  // Same points, labels and distances.
  friend bool operator==(const FiniteMetricSpace& a,
                         const FiniteMetricSpace& b);

 private:
  struct Impl;
  explicit FiniteMetricSpace(std::shared_ptr<const Impl> impl);
  friend FiniteMetricSpace ProductSpace(
      const std::vector<FiniteMetricSpace>& factors, Combiner combiner,
      const Limits& limits);

  std::shared_ptr<const Impl> impl_;
};

std::string FormatReal(double value);

// A nonempty set of point indices, kept sorted and deduplicated.
class PointSet {
 public:
  // Throws InputError when `members` is empty or has an index >= universe.
  PointSet(std::vector<PointIndex> members, std::size_t universe);

  static PointSet Singleton(PointIndex point, std::size_t universe);
  static PointSet All(std::size_t universe);

  std::span<const PointIndex> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  std::size_t universe() const { return universe_; }
  bool contains(PointIndex point) const;
  PointIndex front() const { return members_.front(); }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const PointSet& a, const PointSet& b) = default;

 private:
  std::vector<PointIndex> members_;
  std::size_t universe_;
};

struct MetricViolation {
  std::string axiom;  // zero_diagonal | positivity | symmetry | triangle
  std::vector<PointIndex> witness;
  double magnitude;

  friend bool operator==(const MetricViolation&,
                         const MetricViolation&) = default;
};

struct ValidationReport {
  bool passed = true;
  std::vector<MetricViolation> violations;
};

// Checks d(i,i) = 0, d(i,j) > 0, |d(i,j) - d(j,i)| <= tol and
// d(i,k) <= d(i,j) + d(j,k) + tol over ordered triples of distinct points.
// Triangle witnesses are (i, j, k) with magnitude d(i,k) - d(i,j) - d(j,k).
ValidationReport ValidateMetric(const FiniteMetricSpace& space,
                                double tol = kDefaultTriangleTolerance);

// Closed expansion {z : d(x, z) <= radius for some x in around}.
PointSet Ball(const FiniteMetricSpace& space, const PointSet& around,
              double radius);

// Partition of the points into classes; classes are ordered by their
// smallest member and each class is sorted.
struct Partition {
  std::vector<std::vector<PointIndex>> classes;
  std::vector<std::size_t> class_of;

  std::size_t num_classes() const { return classes.size(); }
};

// Maximal r-chainable classes: connected components of the graph joining
// points at distance strictly less than r.
Partition ComponentsAtScale(const FiniteMetricSpace& space, double r);

struct ChainabilityResult {
  bool chainable = false;
  Partition components;
};

ChainabilityResult IsRChainable(const FiniteMetricSpace& space, double r);

// Smallest L such that joining points at distance <= L connects the space
// (the longest edge of a minimum spanning tree). 0 for a single point. Any
// r > L makes the space r-chainable.
double ConnectivityScale(const FiniteMetricSpace& space);

struct PairConvexity {
  PointIndex x;
  PointIndex y;
  bool passes;
  std::optional<PointIndex> via;
};

struct ConvexityReport {
  std::vector<PairConvexity> pairs;  // every x < y
  bool all_pass = true;
};

// Diagnostic for metric convexity: a pair passes when some third point z
// satisfies |d(x,z) + d(z,y) - d(x,y)| <= tol (lowest such z reported).
ConvexityReport CheckMetricConvexity(const FiniteMetricSpace& space,
                                     double tol);

// Cartesian product of the factors under the given combiner. Labels are
// "(a,b,...)"; a single factor is returned unchanged. Throws ResourceError
// above limits.max_product_points.
FiniteMetricSpace ProductSpace(const std::vector<FiniteMetricSpace>& factors,
                               Combiner combiner = Combiner::kMax,
                               const Limits& limits = Limits());

}  // namespace metricfix

#endif  // METRICFIX_METRIC_SPACE_H_
