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

#include "metricfix/derived_metric.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>
#include <utility>

#include "metricfix/errors.h"

namespace metricfix {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void CheckScale(double scale, const char* name) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw InputError(std::string(name) + " must be a positive finite number");
  }
}

void CheckSize(const FiniteMetricSpace& space, const Limits& limits) {
  if (space.size() > limits.max_space_points) {
    throw ResourceError("derived metrics are limited to " +
                        std::to_string(limits.max_space_points) +
                        " points, space has " + std::to_string(space.size()));
  }
}

// Out-neighbors joined by a hop shorter than `scale`, in index order.
std::vector<std::vector<PointIndex>> HopGraph(const FiniteMetricSpace& space,
                                              double scale) {
  const std::size_t n = space.size();
  std::vector<std::vector<PointIndex>> adj(n);
  for (PointIndex u = 0; u < n; ++u) {
    for (PointIndex v = 0; v < n; ++v) {
      if (u != v && space.distance(u, v) < scale) adj[u].push_back(v);
    }
  }
  return adj;
}

// Dense O(n^2) Dijkstra; the unsettled vertex with the smallest tentative
// distance (lowest index on ties) is settled next.
std::vector<double> DijkstraFrom(const FiniteMetricSpace& space, double eps,
                                 PointIndex source) {
  const std::size_t n = space.size();
  std::vector<double> dist(n, kInf);
  std::vector<bool> settled(n, false);
  dist[source] = 0.0;
  for (std::size_t round = 0; round < n; ++round) {
    PointIndex u = n;
    for (PointIndex v = 0; v < n; ++v) {
      if (!settled[v] && dist[v] < kInf && (u == n || dist[v] < dist[u])) u = v;
    }
    if (u == n) break;
    settled[u] = true;
    for (PointIndex v = 0; v < n; ++v) {
      if (settled[v] || v == u) continue;
      const double w = space.distance(u, v);
      if (w < eps && dist[u] + w < dist[v]) dist[v] = dist[u] + w;
    }
  }
  return dist;
}

}  // namespace

DerivedMetric::DerivedMetric(FiniteMetricSpace base, DerivedKind kind,
                             double scale, std::vector<double> table,
                             Partition components)
    : base_(std::move(base)),
      kind_(kind),
      scale_(scale),
      table_(std::move(table)),
      components_(std::move(components)) {}

std::optional<double> DerivedMetric::distance(PointIndex i,
                                              PointIndex j) const {
  const double d = table_[i * size() + j];
  if (d == kInf) return std::nullopt;
  return d;
}

DerivedMetric ChainMetric(const FiniteMetricSpace& space, double r,
                          const Limits& limits) {
  CheckScale(r, "chain scale r");
  CheckSize(space, limits);
  const std::size_t n = space.size();
  const auto adj = HopGraph(space, r);
  std::vector<double> table(n * n, kInf);
  std::vector<bool> queued(n, false);
  std::deque<PointIndex> queue;
  for (PointIndex s = 0; s < n; ++s) {
    double* best = &table[s * n];
    best[s] = 0.0;
    queue.push_back(s);
    queued[s] = true;
    while (!queue.empty()) {
      const PointIndex u = queue.front();
      queue.pop_front();
      queued[u] = false;
      for (PointIndex v : adj[u]) {
        const double extended = best[u] + space.distance(u, v);
        if (extended < best[v]) {
          best[v] = extended;
          if (!queued[v]) {
            queued[v] = true;
            queue.push_back(v);
          }
        }
      }
    }
  }
  return DerivedMetric(space, DerivedKind::kChain, r, std::move(table),
                       ComponentsAtScale(space, r));
}

DerivedMetric PathMetric(const FiniteMetricSpace& space, double eps,
                         const Limits& limits) {
  CheckScale(eps, "path scale eps");
  CheckSize(space, limits);
  const std::size_t n = space.size();
  std::vector<double> table;
  table.reserve(n * n);
  for (PointIndex s = 0; s < n; ++s) {
    const auto row = DijkstraFrom(space, eps, s);
    table.insert(table.end(), row.begin(), row.end());
  }
  return DerivedMetric(space, DerivedKind::kPath, eps, std::move(table),
                       ComponentsAtScale(space, eps));
}

DiscretePath::DiscretePath(std::vector<PointIndex> waypoints)
    : waypoints_(std::move(waypoints)) {
  if (waypoints_.empty()) throw InputError("a path needs a waypoint");
  const std::size_t segments = waypoints_.size() - 1;
  params_.resize(waypoints_.size());
  for (std::size_t i = 0; i < waypoints_.size(); ++i) {
    params_[i] = segments == 0 ? 0.0
                               : static_cast<double>(i) /
                                     static_cast<double>(segments);
  }
  for (std::size_t i = 1; i < waypoints_.size(); ++i) {
    if (waypoints_[i] == waypoints_[i - 1]) {
      throw InputError("consecutive waypoints must differ");
    }
  }
}

DiscretePath::DiscretePath(std::vector<PointIndex> waypoints,
                           std::vector<double> params)
    : waypoints_(std::move(waypoints)), params_(std::move(params)) {
  if (waypoints_.empty()) throw InputError("a path needs a waypoint");
  if (params_.size() != waypoints_.size()) {
    throw InputError("path needs one parameter per waypoint");
  }
  if (params_.front() != 0.0) throw InputError("path must start at t = 0");
  if (waypoints_.size() > 1 && params_.back() != 1.0) {
    throw InputError("path must end at t = 1");
  }
  for (std::size_t i = 1; i < waypoints_.size(); ++i) {
    if (waypoints_[i] == waypoints_[i - 1]) {
      throw InputError("consecutive waypoints must differ");
    }
    if (!(params_[i] > params_[i - 1])) {
      throw InputError("path parameters must be strictly increasing");
    }
  }
}

namespace {

void CheckWaypoints(const FiniteMetricSpace& space, const DiscretePath& path) {
  for (PointIndex w : path.waypoints()) {
    if (w >= space.size()) {
      throw InputError("waypoint " + std::to_string(w) + " is not in the space");
    }
  }
}

std::size_t AlignedWaypoint(const DiscretePath& path, double t) {
  const auto& params = path.params();
  auto it = std::lower_bound(params.begin(), params.end(), t);
  if (it == params.end() || *it != t) {
    throw InputError("sub-range endpoint " + FormatReal(t) +
                     " is not a waypoint parameter");
  }
  return static_cast<std::size_t>(it - params.begin());
}

}  // namespace

double PathLength(const FiniteMetricSpace& space, const DiscretePath& path,
                  std::optional<ParamRange> sub) {
  CheckWaypoints(space, path);
  std::size_t first = 0;
  std::size_t last = path.size() - 1;
  if (sub) {
    if (!(sub->a < sub->b)) throw InputError("sub-range needs a < b");
    first = AlignedWaypoint(path, sub->a);
    last = AlignedWaypoint(path, sub->b);
  }
  const auto& w = path.waypoints();
  double length = 0.0;
  for (std::size_t i = first; i < last; ++i) {
    length += space.distance(w[i], w[i + 1]);
  }
  return length;
}

DiscretePath Reparametrize(const FiniteMetricSpace& space,
                           const DiscretePath& path) {
  const double total = PathLength(space, path);
  if (!(total > 0.0)) {
    throw InputError("cannot reparametrize a path of zero length");
  }
  const auto& w = path.waypoints();
  std::vector<double> params(w.size());
  double cumulative = 0.0;
  params[0] = 0.0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    cumulative += space.distance(w[i - 1], w[i]);
    params[i] = cumulative / total;
  }
  return DiscretePath(w, std::move(params));
}

DiscretePath Geodesic(const FiniteMetricSpace& space, double eps,
                      PointIndex x, PointIndex y) {
  CheckScale(eps, "path scale eps");
  const std::size_t n = space.size();
  if (x >= n || y >= n) throw InputError("geodesic endpoint out of range");
  if (x == y) return DiscretePath({x});
  const auto dist = DijkstraFrom(space, eps, x);
  if (dist[y] == kInf) {
    throw NoPathError("no path from '" + space.label(x) + "' to '" +
                      space.label(y) + "' with hops shorter than " +
                      FormatReal(eps));
  }
  // Hop u -> v is tight when it realizes dist[v] exactly; every route of
  // tight hops from x therefore sums to the tabulated distance.
  auto tight = [&](PointIndex u, PointIndex v) {
    if (u == v || dist[u] == kInf) return false;
    const double w = space.distance(u, v);
    return w < eps && dist[u] + w == dist[v];
  };
  std::vector<bool> reaches_target(n, false);
  std::vector<PointIndex> stack = {y};
  reaches_target[y] = true;
  while (!stack.empty()) {
    const PointIndex v = stack.back();
    stack.pop_back();
    for (PointIndex u = 0; u < n; ++u) {
      if (!reaches_target[u] && tight(u, v)) {
        reaches_target[u] = true;
        stack.push_back(u);
      }
    }
  }
  std::vector<PointIndex> waypoints = {x};
  std::vector<bool> used(n, false);
  used[x] = true;
  PointIndex at = x;
  while (at != y) {
    PointIndex next = n;
    for (PointIndex v = 0; v < n; ++v) {
      if (!used[v] && reaches_target[v] && tight(at, v)) {
        next = v;
        break;
      }
    }
    if (next == n) {
      throw NoPathError("geodesic reconstruction lost the target");
    }
    used[next] = true;
    waypoints.push_back(next);
    at = next;
  }
  return DiscretePath(std::move(waypoints));
}

}  // namespace metricfix
