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

#ifndef METRICFIX_CONTRACTION_H_
#define METRICFIX_CONTRACTION_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metricfix/derived_metric.h"
#include "metricfix/hausdorff.h"
#include "metricfix/set_valued_map.h"

namespace metricfix {

// Ratios must stay below 1 - kStrictnessTolerance for a certificate to
// hold; a worst ratio within this distance of 1 is flagged as boundary.
inline constexpr double kStrictnessTolerance = 1e-12;

enum class CertificateKind { kGlobal, kUniformLocal, kPointwise, kShrinking };

std::string_view CertificateKindName(CertificateKind kind);

struct WorstPair {
  PointIndex x;
  PointIndex y;
  double ratio;  // H(F(x), F(y)) / m(x, y)
};

struct ContractionCertificate {
  CertificateKind kind = CertificateKind::kGlobal;
  // Largest scanned ratio: beta for global and uniform certificates, the
  // max of the per-point moduli otherwise. 0 when no pair was scanned.
  double modulus = 0.0;
  std::vector<double> point_moduli;  // beta_x; pointwise and local only
  std::optional<double> radius;      // local radius or neighborhood radius
  std::optional<WorstPair> worst_pair;
  bool holds = false;
  bool boundary = false;
  bool uniform = false;  // pointwise: one beta < 1 serves every point
  // Pairs whose ratio is undefined under the view (different components).
  std::vector<std::pair<PointIndex, PointIndex>> unevaluable_pairs;
  // Pointwise: points whose neighborhood has no other point (beta_x = 0).
  std::vector<PointIndex> isolated_points;
};

// N(x) for pointwise certification: the k nearest other points (ties by
// index), or the open ball {y != x : m(x, y) < radius}.
struct Neighborhood {
  enum class Kind { kNearest, kRadius };
  Kind kind = Kind::kNearest;
  std::size_t k = 1;
  double radius = 0.0;

  static Neighborhood Nearest(std::size_t k) {
    return {Kind::kNearest, k, 0.0};
  }
  static Neighborhood Radius(double radius) {
    return {Kind::kRadius, 0, radius};
  }
  std::string Describe() const;
};

// Members of N(x) under m, ascending. Unreachable points are never members.
std::vector<PointIndex> NeighborhoodMembers(const MetricView& m, PointIndex x,
                                            const Neighborhood& nb);

// max over x != y of H(F(x), F(y)) / m(x, y).
ContractionCertificate GlobalModulus(const SetValuedMap& f,
                                     const MetricView& m);

// beta_x = max ratio over y in N(x).
ContractionCertificate PointwiseCertificate(const SetValuedMap& f,
                                            const MetricView& m,
                                            const Neighborhood& neighborhood);

// beta_x = max ratio over pairs u != v inside the closed ball B_r(x); the
// uniform certificate is (max_x beta_x, r).
ContractionCertificate LocalCertificate(const SetValuedMap& f,
                                        const MetricView& m, double r);

// H(F(x), F(y)) < m(x, y) for every pair x != y.
ContractionCertificate ShrinkingCertificate(const SetValuedMap& f,
                                            const MetricView& m);

// Scale-h proxy for the slope lim sup: s_h(x) = max ratio over y with
// 0 < m(x, y) <= h, and 0 (flagged isolated) when there is no such y.
struct SlopeTable {
  double scale = 0.0;
  std::vector<double> slope;
  std::vector<bool> isolated;
};

SlopeTable DiscreteSlope(const SetValuedMap& f, const MetricView& m,
                         double h);

// Sum of H(F(p_{i-1}), F(p_i)) over consecutive waypoints.
MaybeDistance ImagePathLength(const SetValuedMap& f, const DiscretePath& path,
                              const MetricView& m);

}  // namespace metricfix

#endif  // METRICFIX_CONTRACTION_H_
