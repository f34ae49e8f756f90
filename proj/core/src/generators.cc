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

#include "metricfix/generators.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "metricfix/errors.h"
#include "metricfix/hausdorff.h"

namespace metricfix {
namespace {

std::vector<std::string> IndexLabels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return labels;
}

std::size_t Pick(std::size_t n, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// Symmetric partner lists: the pairs whose ratio the certificate of the
// requested scope inspects.
std::vector<std::vector<PointIndex>> Partners(const FiniteMetricSpace& space,
                                              const ContractionSpec& spec) {
  const std::size_t n = space.size();
  std::vector<std::vector<char>> linked(n, std::vector<char>(n, 0));
  switch (spec.scope) {
    case ContractionScope::kGlobal:
      for (auto& row : linked) std::fill(row.begin(), row.end(), 1);
      break;
    case ContractionScope::kLocal:
      for (PointIndex z = 0; z < n; ++z) {
        std::vector<PointIndex> ball;
        for (PointIndex u = 0; u < n; ++u) {
          if (space.distance(z, u) <= spec.r) ball.push_back(u);
        }
        for (PointIndex u : ball) {
          for (PointIndex v : ball) linked[u][v] = 1;
        }
      }
      break;
    case ContractionScope::kPointwise: {
      const MetricView m(space);
      for (PointIndex x = 0; x < n; ++x) {
        for (PointIndex y : NeighborhoodMembers(m, x, spec.neighborhood)) {
          linked[x][y] = linked[y][x] = 1;
        }
      }
      break;
    }
  }
  std::vector<std::vector<PointIndex>> partners(n);
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) {
      if (x != y && linked[x][y]) partners[x].push_back(y);
    }
  }
  return partners;
}

PointSet WithMember(const PointSet& set, PointIndex extra) {
  std::vector<PointIndex> members(set.begin(), set.end());
  members.push_back(extra);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return PointSet(std::move(members), set.universe());
}

}  // namespace

FiniteMetricSpace RandomEuclideanSpace(std::size_t n, std::size_t dim,
                                       Rng& rng) {
  if (n == 0 || dim == 0) throw InputError("need n >= 1 and dim >= 1");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<double>> coords(n, std::vector<double>(dim));
  for (auto& row : coords) {
    for (double& c : row) c = unit(rng);
  }
  return FiniteMetricSpace::FromEmbedding(IndexLabels(n), coords);
}

FiniteMetricSpace RandomTableSpace(std::size_t n, Rng& rng) {
  if (n == 0) throw InputError("need n >= 1");
  std::uniform_real_distribution<double> span(1.0, 2.0);
  std::vector<double> table(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      table[i * n + j] = table[j * n + i] = span(rng);
    }
  }
  return FiniteMetricSpace(IndexLabels(n), std::move(table));
}

FiniteMetricSpace UniformGrid(std::size_t n) {
  if (n < 2) throw InputError("a grid needs at least two points");
  std::vector<double> coords(n);
  for (std::size_t i = 0; i < n; ++i) {
    coords[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return FiniteMetricSpace::Line(coords);
}

SetValuedMap RandomMap(const FiniteMetricSpace& space, std::size_t max_image,
                       Rng& rng) {
  const std::size_t n = space.size();
  max_image = std::clamp<std::size_t>(max_image, 1, n);
  std::vector<PointSet> images;
  images.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t count = 1 + Pick(max_image, rng);
    std::vector<PointIndex> members;
    for (std::size_t k = 0; k < count; ++k) members.push_back(Pick(n, rng));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    images.emplace_back(std::move(members), n);
  }
  return SetValuedMap(space, std::move(images));
}

SetValuedMap GenerateContraction(const FiniteMetricSpace& space,
                                 const ContractionSpec& spec, Rng& rng,
                                 const SetValuedMap* start) {
  if (!(spec.beta >= 0.0 && spec.beta < 1.0)) {
    throw InputError("beta must lie in [0, 1)");
  }
  if (spec.scope == ContractionScope::kLocal && !(spec.r > 0.0)) {
    throw InputError("local contractions need r > 0");
  }
  const std::size_t n = space.size();
  const MetricView m(space);
  const auto partners = Partners(space, spec);
  std::vector<PointSet> images;
  if (start != nullptr) {
    if (!(start->space() == space)) {
      throw InputError("start map lives on a different space");
    }
    images = start->images();
  } else {
    images.assign(n, PointSet::Singleton(Pick(n, rng), n));
  }

  auto admissible = [&](PointIndex x, const PointSet& candidate) {
    for (PointIndex v : partners[x]) {
      const double h = *HausdorffDistance(candidate, images[v], m);
      if (h / space.distance(x, v) > spec.beta) return false;
    }
    return true;
  };

  if (start != nullptr) {
    for (PointIndex x = 0; x < n; ++x) {
      if (!admissible(x, images[x])) {
        throw InputError("start map violates the contraction constraints");
      }
    }
  }

  // Uniform proposals are rarely admissible once images cluster, so half
  // of them are drawn from the few points nearest to a current member.
  const std::size_t near = std::min<std::size_t>(n, 6);
  std::vector<std::vector<PointIndex>> nearest(n);
  for (PointIndex p = 0; p < n; ++p) {
    std::vector<PointIndex> ranked(n);
    for (PointIndex q = 0; q < n; ++q) ranked[q] = q;
    std::partial_sort(ranked.begin(), ranked.begin() + near, ranked.end(),
                      [&](PointIndex a, PointIndex b) {
                        return std::pair(space.distance(p, a), a) <
                               std::pair(space.distance(p, b), b);
                      });
    nearest[p].assign(ranked.begin(), ranked.begin() + near);
  }
  auto propose = [&](PointIndex x) {
    if (rng() & 1) return Pick(n, rng);
    const PointSet& current = images[x];
    const PointIndex anchor = current.members()[Pick(current.size(), rng)];
    return nearest[anchor][Pick(near, rng)];
  };

  std::vector<PointIndex> order(n);
  for (PointIndex i = 0; i < n; ++i) order[i] = i;
  for (std::size_t sweep = 0; sweep < spec.sweeps; ++sweep) {
    std::shuffle(order.begin(), order.end(), rng);
    for (PointIndex x : order) {
      PointSet moved = PointSet::Singleton(propose(x), n);
      if (admissible(x, moved)) images[x] = std::move(moved);
      if (spec.set_valued) {
        PointSet grown = WithMember(images[x], propose(x));
        if (admissible(x, grown)) images[x] = std::move(grown);
      }
    }
  }
  return SetValuedMap(space, std::move(images));
}

OrbitInstance RandomOrbitInstance(std::size_t seeds, std::size_t depth,
                                  double lambda, Rng& rng) {
  if (seeds == 0) throw InputError("need at least one seed");
  if (!(lambda > 0.0 && lambda <= 0.45)) {
    throw InputError("lambda must lie in (0, 0.45]");
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double pi = std::acos(-1.0);
  const double cx = unit(rng);
  const double cy = unit(rng);
  const double radius = 0.25 + 0.5 * unit(rng);
  const double theta = 2.0 * pi * unit(rng);
  const double ct = lambda * std::cos(theta);
  const double st = lambda * std::sin(theta);

  std::vector<std::vector<double>> coords = {{cx, cy}};
  std::vector<PointIndex> next = {0};
  for (std::size_t s = 0; s < seeds; ++s) {
    const double angle = 2.0 * pi * unit(rng);
    const double rho = radius * (0.9 + 0.1 * unit(rng));
    double dx = rho * std::cos(angle);
    double dy = rho * std::sin(angle);
    for (std::size_t k = 0; k <= depth; ++k) {
      coords.push_back({cx + dx, cy + dy});
      next.push_back(k == depth ? 0 : coords.size());
      const double nx = ct * dx - st * dy;
      dy = st * dx + ct * dy;
      dx = nx;
    }
  }
  FiniteMetricSpace space =
      FiniteMetricSpace::FromEmbedding(IndexLabels(coords.size()), coords);
  SetValuedMap map = SetValuedMap::FromFunction(
      space, [&next](PointIndex i) { return next[i]; });
  return {std::move(space), std::move(map)};
}

DiscretePath RandomWalkPath(const FiniteMetricSpace& space,
                            const Neighborhood& nb, std::size_t hops,
                            Rng& rng) {
  const MetricView m(space);
  std::vector<PointIndex> waypoints = {Pick(space.size(), rng)};
  for (std::size_t h = 0; h < hops; ++h) {
    const auto next = NeighborhoodMembers(m, waypoints.back(), nb);
    if (next.empty()) break;
    waypoints.push_back(next[Pick(next.size(), rng)]);
  }
  return DiscretePath(std::move(waypoints));
}

DiscretePath RandomPath(const FiniteMetricSpace& space, std::size_t waypoints,
                        Rng& rng) {
  const std::size_t n = space.size();
  if (n < 2 || waypoints == 0) {
    throw InputError("random paths need two points and one waypoint");
  }
  std::vector<PointIndex> points = {Pick(n, rng)};
  while (points.size() < waypoints) {
    // Uniform over the other n - 1 points.
    PointIndex next = Pick(n - 1, rng);
    if (next >= points.back()) ++next;
    points.push_back(next);
  }
  return DiscretePath(std::move(points));
}

Game RandomTableGame(const std::vector<std::size_t>& sizes, int levels,
                     Rng& rng) {
  if (levels < 1) throw InputError("levels must be >= 1");
  std::vector<FiniteMetricSpace> spaces;
  for (std::size_t k : sizes) {
    std::vector<double> coords(k);
    for (std::size_t i = 0; i < k; ++i) coords[i] = static_cast<double>(i);
    spaces.push_back(FiniteMetricSpace::Line(coords));
  }
  const ProductShape shape(sizes);
  std::uniform_int_distribution<int> payoff(0, levels - 1);
  PayoffTable table;
  table.values.assign(sizes.size(), std::vector<double>(shape.total()));
  for (auto& row : table.values) {
    for (double& v : row) v = payoff(rng);
  }
  return Game(std::move(spaces), std::move(table));
}

Game QuadraticGame(double a, double b, std::size_t grid_points) {
  const FiniteMetricSpace grid = UniformGrid(grid_points);
  const std::string a_text = FormatReal(a);
  const std::string b_text = FormatReal(b);
  PayoffFormulas formulas;
  formulas.formulas.push_back(Expression::Parse(
      "-(x1 - " + a_text + " - " + b_text + "*x2)^2", 2));
  formulas.formulas.push_back(Expression::Parse(
      "-(x2 - " + a_text + " - " + b_text + "*x1)^2", 2));
  return Game({grid, grid}, std::move(formulas));
}

Game DiscoordinationGame() {
  const std::vector<double> coords = {0.0, 1.0};
  const FiniteMetricSpace two = FiniteMetricSpace::Line(coords);
  // Profiles (0,0), (0,1), (1,0), (1,1).
  PayoffTable table;
  table.values = {{1, 0, 0, 1}, {0, 1, 1, 0}};
  return Game({two, two}, std::move(table));
}

SetValuedMap DyadicHalvingMap(int m) {
  if (m < 1 || m > 60) throw InputError("need 1 <= m <= 60");
  std::vector<double> coords;
  for (int k = m; k >= 0; --k) coords.push_back(std::ldexp(1.0, -k));
  const FiniteMetricSpace space = FiniteMetricSpace::Line(coords);
  // Index i holds 2^(i-m); halving moves one index down, the floor stays.
  return SetValuedMap::FromFunction(
      space, [](PointIndex i) { return i == 0 ? PointIndex{0} : i - 1; });
}

SetValuedMap TwoClusterSwapMap() {
  const std::vector<double> coords = {1, 2, 4, 21, 22, 24};
  const FiniteMetricSpace space = FiniteMetricSpace::Line(coords);
  // Offsets 1,2,4 sit at in-cluster slots 0,1,2; halving maps slot s to
  // max(s-1, 0) in the other cluster.
  return SetValuedMap::FromFunction(space, [](PointIndex i) {
    const PointIndex slot = i % 3;
    const PointIndex other = i < 3 ? 3 : 0;
    return other + (slot == 0 ? 0 : slot - 1);
  });
}

}  // namespace metricfix
