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

#include "metricfix/metric_space.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <cmath>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "metricfix/errors.h"

namespace metricfix {

std::string_view CombinerName(Combiner combiner) {
  switch (combiner) {
    case Combiner::kMax:
      return "max";
    case Combiner::kSum:
      return "sum";
    case Combiner::kEuclidean:
      return "euclidean";
  }
  return "max";
}

std::optional<Combiner> ParseCombiner(std::string_view name) {
  if (name == "max") return Combiner::kMax;
  if (name == "sum") return Combiner::kSum;
  if (name == "euclidean") return Combiner::kEuclidean;
  return std::nullopt;
}

double Combine(Combiner combiner, std::span<const double> factor_distances) {
  double acc = 0.0;
  switch (combiner) {
    case Combiner::kMax:
      for (double d : factor_distances) acc = std::max(acc, d);
      return acc;
    case Combiner::kSum:
      for (double d : factor_distances) acc += d;
      return acc;
    case Combiner::kEuclidean:
      for (double d : factor_distances) acc += d * d;
      return std::sqrt(acc);
  }
  return acc;
}

ProductShape::ProductShape(std::vector<std::size_t> sizes)
    : sizes_(std::move(sizes)), strides_(sizes_.size(), 1) {
  total_ = 1;
  for (std::size_t f = sizes_.size(); f-- > 0;) {
    strides_[f] = total_;
    total_ *= sizes_[f];
  }
}

std::size_t ProductShape::Encode(
    std::span<const std::size_t> coordinates) const {
  if (coordinates.size() != sizes_.size()) {
    throw InputError("profile has " + std::to_string(coordinates.size()) +
                     " coordinates, expected " +
                     std::to_string(sizes_.size()));
  }
  std::size_t index = 0;
  for (std::size_t f = 0; f < sizes_.size(); ++f) {
    if (coordinates[f] >= sizes_[f]) {
      throw InputError("coordinate " + std::to_string(coordinates[f]) +
                       " out of range for factor " + std::to_string(f));
    }
    index += coordinates[f] * strides_[f];
  }
  return index;
}

std::vector<std::size_t> ProductShape::Decode(std::size_t index) const {
  std::vector<std::size_t> out(sizes_.size());
  for (std::size_t f = 0; f < sizes_.size(); ++f) out[f] = Coordinate(index, f);
  return out;
}

std::size_t ProductShape::WithCoordinate(std::size_t index, std::size_t factor,
                                         std::size_t value) const {
  return index - Coordinate(index, factor) * strides_[factor] +
         value * strides_[factor];
}

struct FiniteMetricSpace::Impl {
  std::vector<std::string> labels;
  std::unordered_map<std::string, PointIndex> index;
  std::vector<double> table;  // empty for product storage
  std::vector<FiniteMetricSpace> factors;
  ProductShape shape;
  Combiner combiner = Combiner::kMax;
};

namespace {

std::unordered_map<std::string, PointIndex> IndexLabels(
    const std::vector<std::string>& labels) {
  std::unordered_map<std::string, PointIndex> index;
  index.reserve(labels.size());
  for (PointIndex i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) {
      throw InputError("duplicate point label '" + labels[i] + "'");
    }
  }
  return index;
}

}  // namespace

FiniteMetricSpace::FiniteMetricSpace(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels,
                                     std::vector<double> distances) {
  if (labels.empty()) throw InputError("a space needs at least one point");
  const std::size_t n = labels.size();
  if (distances.size() != n * n) {
    throw InputError("distance table has " + std::to_string(distances.size()) +
                     " entries, expected " + std::to_string(n * n));
  }
  for (std::size_t k = 0; k < distances.size(); ++k) {
    if (!std::isfinite(distances[k])) {
      throw InputError("distance entry (" + std::to_string(k / n) + "," +
                       std::to_string(k % n) + ") is not finite");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->index = IndexLabels(labels);
  impl->labels = std::move(labels);
  impl->table = std::move(distances);
  impl_ = std::move(impl);
}

FiniteMetricSpace FiniteMetricSpace::FromRows(
    std::vector<std::string> labels,
    const std::vector<std::vector<double>>& rows) {
  const std::size_t n = labels.size();
  if (rows.size() != n) {
    throw InputError("distance table has " + std::to_string(rows.size()) +
                     " rows for " + std::to_string(n) + " points");
  }
  std::vector<double> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw InputError("distance row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(n));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return FiniteMetricSpace(std::move(labels), std::move(flat));
}

FiniteMetricSpace FiniteMetricSpace::FromEmbedding(
    std::vector<std::string> labels,
    const std::vector<std::vector<double>>& coords) {
  const std::size_t n = labels.size();
  if (coords.size() != n) {
    throw InputError("embedding has " + std::to_string(coords.size()) +
                     " coordinate rows for " + std::to_string(n) + " points");
  }
  const std::size_t dim = n == 0 ? 0 : coords.front().size();
  for (const auto& row : coords) {
    if (row.size() != dim) throw InputError("ragged embedding coordinates");
  }
  std::vector<double> flat(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        const double diff = coords[i][k] - coords[j][k];
        acc += diff * diff;
      }
      flat[i * n + j] = flat[j * n + i] = std::sqrt(acc);
    }
  }
  return FiniteMetricSpace(std::move(labels), std::move(flat));
}

std::string FormatReal(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

FiniteMetricSpace FiniteMetricSpace::Line(std::span<const double> coords) {
  std::vector<std::string> labels;
  labels.reserve(coords.size());
  for (double c : coords) labels.push_back(FormatReal(c));
  const std::size_t n = coords.size();
  std::vector<double> flat(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      flat[i * n + j] = std::abs(coords[i] - coords[j]);
    }
  }
  return FiniteMetricSpace(std::move(labels), std::move(flat));
}

std::size_t FiniteMetricSpace::size() const { return impl_->labels.size(); }

double FiniteMetricSpace::distance(PointIndex i, PointIndex j) const {
  const Impl& impl = *impl_;
  if (!impl.factors.empty()) {
    if (i == j) return 0.0;
    const std::size_t nf = impl.factors.size();
    double acc = 0.0;
    for (std::size_t f = 0; f < nf; ++f) {
      const double d = impl.factors[f].distance(impl.shape.Coordinate(i, f),
                                                impl.shape.Coordinate(j, f));
      switch (impl.combiner) {
        case Combiner::kMax:
          acc = std::max(acc, d);
          break;
        case Combiner::kSum:
          acc += d;
          break;
        case Combiner::kEuclidean:
          acc += d * d;
          break;
      }
    }
    return impl.combiner == Combiner::kEuclidean ? std::sqrt(acc) : acc;
  }
  return impl.table[i * impl.labels.size() + j];
}

const std::string& FiniteMetricSpace::label(PointIndex i) const {
  return impl_->labels.at(i);
}

const std::vector<std::string>& FiniteMetricSpace::labels() const {
  return impl_->labels;
}

std::optional<PointIndex> FiniteMetricSpace::Find(
    std::string_view label) const {
  auto it = impl_->index.find(std::string(label));
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

double FiniteMetricSpace::Diameter() const {
  double best = 0.0;
  const std::size_t n = size();
  for (PointIndex i = 0; i < n; ++i) {
    for (PointIndex j = 0; j < n; ++j) best = std::max(best, distance(i, j));
  }
  return best;
}

const ProductShape* FiniteMetricSpace::product_shape() const {
  return impl_->factors.empty() ? nullptr : &impl_->shape;
}

const std::vector<FiniteMetricSpace>& FiniteMetricSpace::factors() const {
  return impl_->factors;
}

std::optional<Combiner> FiniteMetricSpace::combiner() const {
  if (impl_->factors.empty()) return std::nullopt;
  return impl_->combiner;
}

bool operator==(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.labels() != b.labels()) return false;
  const std::size_t n = a.size();
  for (PointIndex i = 0; i < n; ++i) {
    for (PointIndex j = 0; j < n; ++j) {
      if (a.distance(i, j) != b.distance(i, j)) return false;
    }
  }
  return true;
}

PointSet::PointSet(std::vector<PointIndex> members, std::size_t universe)
    : members_(std::move(members)), universe_(universe) {
  if (members_.empty()) throw InputError("point set must be nonempty");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  if (members_.back() >= universe_) {
    throw InputError("point index " + std::to_string(members_.back()) +
                     " out of range for a space of " +
                     std::to_string(universe_) + " points");
  }
}

PointSet PointSet::Singleton(PointIndex point, std::size_t universe) {
  return PointSet({point}, universe);
}

PointSet PointSet::All(std::size_t universe) {
  std::vector<PointIndex> members(universe);
  std::iota(members.begin(), members.end(), PointIndex{0});
  return PointSet(std::move(members), universe);
}

bool PointSet::contains(PointIndex point) const {
  return std::binary_search(members_.begin(), members_.end(), point);
}

ValidationReport ValidateMetric(const FiniteMetricSpace& space, double tol) {
  ValidationReport report;
  const std::size_t n = space.size();
  auto add = [&](std::string axiom, std::vector<PointIndex> witness,
                 double magnitude) {
    report.violations.push_back(
        {std::move(axiom), std::move(witness), magnitude});
  };
  for (PointIndex i = 0; i < n; ++i) {
    if (space.distance(i, i) != 0.0) {
      add("zero_diagonal", {i}, std::abs(space.distance(i, i)));
    }
  }
  for (PointIndex i = 0; i < n; ++i) {
    for (PointIndex j = 0; j < n; ++j) {
      if (i != j && space.distance(i, j) <= 0.0) {
        add("positivity", {i, j}, -space.distance(i, j));
      }
    }
  }
  for (PointIndex i = 0; i < n; ++i) {
    for (PointIndex j = i + 1; j < n; ++j) {
      const double gap = std::abs(space.distance(i, j) - space.distance(j, i));
      if (gap > tol) add("symmetry", {i, j}, gap);
    }
  }
  for (PointIndex i = 0; i < n; ++i) {
    for (PointIndex j = 0; j < n; ++j) {
      if (j == i) continue;
      const double dij = space.distance(i, j);
      for (PointIndex k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double excess = space.distance(i, k) - (dij + space.distance(j, k));
        if (excess > tol) add("triangle", {i, j, k}, excess);
      }
    }
  }
  report.passed = report.violations.empty();
  return report;
}

PointSet Ball(const FiniteMetricSpace& space, const PointSet& around,
              double radius) {
  if (!(radius >= 0.0)) throw InputError("ball radius must be nonnegative");
  if (around.universe() != space.size()) {
    throw InputError("point set does not belong to this space");
  }
  std::vector<PointIndex> members;
  for (PointIndex z = 0; z < space.size(); ++z) {
    for (PointIndex x : around) {
      if (space.distance(x, z) <= radius) {
        members.push_back(z);
        break;
      }
    }
  }
  return PointSet(std::move(members), space.size());
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Keeps the smaller root so results do not depend on merge order.
  bool Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

void RequirePositiveScale(double r, const char* name) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw InputError(std::string(name) + " must be a positive finite number");
  }
}

}  // namespace

Partition ComponentsAtScale(const FiniteMetricSpace& space, double r) {
  RequirePositiveScale(r, "chain scale r");
  const std::size_t n = space.size();
  DisjointSets sets(n);
  for (PointIndex i = 0; i < n; ++i) {
    for (PointIndex j = i + 1; j < n; ++j) {
      if (space.distance(i, j) < r) sets.Union(i, j);
    }
  }
  Partition partition;
  partition.class_of.assign(n, 0);
  std::vector<std::size_t> class_of_root(n, n);
  for (PointIndex i = 0; i < n; ++i) {
    const std::size_t root = sets.Find(i);
    if (class_of_root[root] == n) {
      class_of_root[root] = partition.classes.size();
      partition.classes.emplace_back();
    }
    partition.class_of[i] = class_of_root[root];
    partition.classes[class_of_root[root]].push_back(i);
  }
  return partition;
}

ChainabilityResult IsRChainable(const FiniteMetricSpace& space, double r) {
  ChainabilityResult result;
  result.components = ComponentsAtScale(space, r);
  result.chainable = result.components.num_classes() == 1;
  return result;
}

double ConnectivityScale(const FiniteMetricSpace& space) {
  // Prim's algorithm on the complete graph.
  const std::size_t n = space.size();
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<bool> in_tree(n, false);
  best[0] = 0.0;
  double longest = 0.0;
  for (std::size_t step = 0; step < n; ++step) {
    PointIndex u = n;
    for (PointIndex v = 0; v < n; ++v) {
      if (!in_tree[v] && (u == n || best[v] < best[u])) u = v;
    }
    in_tree[u] = true;
    longest = std::max(longest, best[u]);
    for (PointIndex v = 0; v < n; ++v) {
      if (!in_tree[v]) {
        best[v] = std::min(best[v], std::max(space.distance(u, v),
                                             space.distance(v, u)));
      }
    }
  }
  return longest;
}

ConvexityReport CheckMetricConvexity(const FiniteMetricSpace& space,
                                     double tol) {
  ConvexityReport report;
  const std::size_t n = space.size();
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = x + 1; y < n; ++y) {
      const double dxy = space.distance(x, y);
      PairConvexity pair{x, y, false, std::nullopt};
      if (dxy > 0.0) {
        for (PointIndex z = 0; z < n; ++z) {
          if (z == x || z == y) continue;
          if (std::abs(space.distance(x, z) + space.distance(z, y) - dxy) <=
              tol) {
            pair.passes = true;
            pair.via = z;
            break;
          }
        }
      }
      report.all_pass = report.all_pass && pair.passes;
      report.pairs.push_back(pair);
    }
  }
  return report;
}

FiniteMetricSpace ProductSpace(const std::vector<FiniteMetricSpace>& factors,
                               Combiner combiner, const Limits& limits) {
  if (factors.empty()) throw InputError("a product needs at least one factor");
  std::vector<std::size_t> sizes;
  std::size_t total = 1;
  for (const auto& f : factors) {
    sizes.push_back(f.size());
    if (total > limits.max_product_points / f.size()) {
      throw ResourceError("product space exceeds the cap of " +
                          std::to_string(limits.max_product_points) +
                          " points");
    }
    total *= f.size();
  }
  if (total > limits.max_product_points) {
    throw ResourceError("product space has " + std::to_string(total) +
                        " points, cap is " +
                        std::to_string(limits.max_product_points));
  }
  if (factors.size() == 1) return factors.front();

  auto impl = std::make_shared<FiniteMetricSpace::Impl>();
  impl->shape = ProductShape(sizes);
  impl->factors = factors;
  impl->combiner = combiner;
  impl->labels.reserve(total);
  for (std::size_t p = 0; p < total; ++p) {
    std::string label = "(";
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (f > 0) label += ',';
      label += factors[f].label(impl->shape.Coordinate(p, f));
    }
    label += ')';
    impl->labels.push_back(std::move(label));
  }
  impl->index = IndexLabels(impl->labels);
  return FiniteMetricSpace(std::move(impl));
}

}  // namespace metricfix
