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

#include "metricfix/contraction.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "metricfix/errors.h"

namespace metricfix {

std::string_view CertificateKindName(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kGlobal:
      return "global";
    case CertificateKind::kUniformLocal:
      return "uniform-local";
    case CertificateKind::kPointwise:
      return "pointwise";
    case CertificateKind::kShrinking:
      return "shrinking";
  }
  return "global";
}

std::string Neighborhood::Describe() const {
  if (kind == Kind::kNearest) return "knn:" + std::to_string(k);
  return "radius:" + FormatReal(radius);
}

namespace {

void CheckView(const SetValuedMap& f, const MetricView& m) {
  if (f.size() != m.size()) {
    throw InputError("metric view and map live on different spaces");
  }
}

// H(F(x), F(y)) / m(x, y), or nullopt when either side is unreachable.
std::optional<double> Ratio(const SetValuedMap& f, const MetricView& m,
                            PointIndex x, PointIndex y) {
  const MaybeDistance d = m(x, y);
  if (!d || !(*d > 0.0)) return std::nullopt;
  const MaybeDistance h = HausdorffDistance(f.image(x), f.image(y), m);
  if (!h) return std::nullopt;
  return *h / *d;
}

// Keeps the first pair attaining the maximum, so scans in index order break
// ties toward the lowest pair.
void Offer(ContractionCertificate& cert, PointIndex x, PointIndex y,
           double ratio) {
  if (!cert.worst_pair || ratio > cert.worst_pair->ratio) {
    cert.worst_pair = WorstPair{x, y, ratio};
  }
}

void Finish(ContractionCertificate& cert) {
  cert.modulus = cert.worst_pair ? cert.worst_pair->ratio : 0.0;
  for (double beta : cert.point_moduli) {
    cert.modulus = std::max(cert.modulus, beta);
  }
  cert.holds = cert.modulus < 1.0 - kStrictnessTolerance;
  cert.boundary = std::abs(cert.modulus - 1.0) <= kStrictnessTolerance;
}

ContractionCertificate AllPairs(const SetValuedMap& f, const MetricView& m,
                                CertificateKind kind) {
  CheckView(f, m);
  ContractionCertificate cert;
  cert.kind = kind;
  for (PointIndex x = 0; x < f.size(); ++x) {
    for (PointIndex y = x + 1; y < f.size(); ++y) {
      if (const auto ratio = Ratio(f, m, x, y)) {
        Offer(cert, x, y, *ratio);
      } else {
        cert.unevaluable_pairs.emplace_back(x, y);
      }
    }
  }
  Finish(cert);
  return cert;
}

std::vector<PointIndex> NeighborsOf(const MetricView& m, PointIndex x,
                                    const Neighborhood& nb) {
  std::vector<PointIndex> out;
  const std::size_t n = m.size();
  if (nb.kind == Neighborhood::Kind::kRadius) {
    for (PointIndex y = 0; y < n; ++y) {
      if (y == x) continue;
      const MaybeDistance d = m(x, y);
      if (d && *d < nb.radius) out.push_back(y);
    }
    return out;
  }
  std::vector<std::pair<double, PointIndex>> ranked;
  for (PointIndex y = 0; y < n; ++y) {
    if (y == x) continue;
    if (const MaybeDistance d = m(x, y)) ranked.emplace_back(*d, y);
  }
  const std::size_t keep = std::min(nb.k, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + keep, ranked.end());
  for (std::size_t i = 0; i < keep; ++i) out.push_back(ranked[i].second);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<PointIndex> NeighborhoodMembers(const MetricView& m, PointIndex x,
                                            const Neighborhood& nb) {
  return NeighborsOf(m, x, nb);
}

ContractionCertificate GlobalModulus(const SetValuedMap& f,
                                     const MetricView& m) {
  return AllPairs(f, m, CertificateKind::kGlobal);
}

ContractionCertificate ShrinkingCertificate(const SetValuedMap& f,
                                            const MetricView& m) {
  return AllPairs(f, m, CertificateKind::kShrinking);
}

ContractionCertificate PointwiseCertificate(const SetValuedMap& f,
                                            const MetricView& m,
                                            const Neighborhood& neighborhood) {
  CheckView(f, m);
  if (neighborhood.kind == Neighborhood::Kind::kNearest &&
      neighborhood.k == 0) {
    throw InputError("knn neighborhood needs k >= 1");
  }
  if (neighborhood.kind == Neighborhood::Kind::kRadius &&
      !(neighborhood.radius > 0.0)) {
    throw InputError("neighborhood radius must be positive");
  }
  ContractionCertificate cert;
  cert.kind = CertificateKind::kPointwise;
  if (neighborhood.kind == Neighborhood::Kind::kRadius) {
    cert.radius = neighborhood.radius;
  }
  cert.point_moduli.assign(f.size(), 0.0);
  for (PointIndex x = 0; x < f.size(); ++x) {
    const auto neighbors = NeighborsOf(m, x, neighborhood);
    if (neighbors.empty()) cert.isolated_points.push_back(x);
    for (PointIndex y : neighbors) {
      if (const auto ratio = Ratio(f, m, x, y)) {
        cert.point_moduli[x] = std::max(cert.point_moduli[x], *ratio);
        Offer(cert, x, y, *ratio);
      } else {
        cert.unevaluable_pairs.emplace_back(x, y);
      }
    }
  }
  Finish(cert);
  cert.uniform = cert.holds;
  return cert;
}

ContractionCertificate LocalCertificate(const SetValuedMap& f,
                                        const MetricView& m, double r) {
  CheckView(f, m);
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw InputError("local radius must be a positive finite number");
  }
  const std::size_t n = f.size();
  // Pair ratios are shared by many balls; memoize them while the table
  // stays small.
  constexpr std::size_t kMaxMemoEntries = std::size_t{1} << 24;
  const bool memoize = n * n <= kMaxMemoEntries;
  std::vector<double> ratio(memoize ? n * n : 0, std::nan(""));
  std::vector<bool> done(memoize ? n * n : 0, false);
  auto pair_ratio = [&](PointIndex u, PointIndex v) {
    if (!memoize) {
      const auto value = Ratio(f, m, u, v);
      return value ? *value : std::nan("");
    }
    const std::size_t key = u * n + v;
    if (!done[key]) {
      done[key] = true;
      if (const auto value = Ratio(f, m, u, v)) ratio[key] = *value;
    }
    return ratio[key];
  };

  ContractionCertificate cert;
  cert.kind = CertificateKind::kUniformLocal;
  cert.radius = r;
  cert.point_moduli.assign(n, 0.0);
  std::vector<std::pair<PointIndex, PointIndex>> unevaluable;
  std::vector<PointIndex> ball;
  for (PointIndex x = 0; x < n; ++x) {
    ball.clear();
    for (PointIndex z = 0; z < n; ++z) {
      const MaybeDistance d = m(x, z);
      if (d && *d <= r) ball.push_back(z);
    }
    for (std::size_t i = 0; i < ball.size(); ++i) {
      for (std::size_t j = i + 1; j < ball.size(); ++j) {
        const PointIndex u = ball[i];
        const PointIndex v = ball[j];
        const double value = pair_ratio(u, v);
        if (std::isnan(value)) {
          unevaluable.emplace_back(u, v);
          continue;
        }
        cert.point_moduli[x] = std::max(cert.point_moduli[x], value);
        Offer(cert, u, v, value);
      }
    }
  }
  std::sort(unevaluable.begin(), unevaluable.end());
  unevaluable.erase(std::unique(unevaluable.begin(), unevaluable.end()),
                    unevaluable.end());
  cert.unevaluable_pairs = std::move(unevaluable);
  Finish(cert);
  cert.uniform = cert.holds;
  return cert;
}

SlopeTable DiscreteSlope(const SetValuedMap& f, const MetricView& m,
                         double h) {
  CheckView(f, m);
  if (!(h > 0.0)) throw InputError("slope scale h must be positive");
  SlopeTable table;
  table.scale = h;
  table.slope.assign(f.size(), 0.0);
  table.isolated.assign(f.size(), true);
  for (PointIndex x = 0; x < f.size(); ++x) {
    for (PointIndex y = 0; y < f.size(); ++y) {
      if (y == x) continue;
      const MaybeDistance d = m(x, y);
      if (!d || !(*d > 0.0) || *d > h) continue;
      if (const auto ratio = Ratio(f, m, x, y)) {
        table.isolated[x] = false;
        table.slope[x] = std::max(table.slope[x], *ratio);
      }
    }
  }
  return table;
}

MaybeDistance ImagePathLength(const SetValuedMap& f, const DiscretePath& path,
                              const MetricView& m) {
  CheckView(f, m);
  const auto& w = path.waypoints();
  for (PointIndex p : w) {
    if (p >= f.size()) throw InputError("path leaves the map's domain");
  }
  double total = 0.0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    const MaybeDistance h = HausdorffDistance(f.image(w[i - 1]),
                                              f.image(w[i]), m);
    if (!h) return std::nullopt;
    total += *h;
  }
  return total;
}

}  // namespace metricfix
