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

// Seeded instance generators. All randomness flows through the caller's
// engine, so a seed reproduces an instance exactly on a given platform.

#ifndef METRICFIX_GENERATORS_H_
#define METRICFIX_GENERATORS_H_

#include <cstddef>
#include <random>
#include <vector>

#include "metricfix/contraction.h"
#include "metricfix/derived_metric.h"
#include "metricfix/game.h"
#include "metricfix/metric_space.h"
#include "metricfix/set_valued_map.h"

namespace metricfix {

using Rng = std::mt19937_64;

// n points uniform in [0,1)^dim under the Euclidean metric.
FiniteMetricSpace RandomEuclideanSpace(std::size_t n, std::size_t dim,
                                       Rng& rng);

// Off-diagonal distances uniform in [1,2); any such table is a metric.
FiniteMetricSpace RandomTableSpace(std::size_t n, Rng& rng);

// {0, 1/(n-1), ..., 1}.
FiniteMetricSpace UniformGrid(std::size_t n);

// Every image a random nonempty set of at most max_image points.
SetValuedMap RandomMap(const FiniteMetricSpace& space, std::size_t max_image,
                       Rng& rng);

enum class ContractionScope { kGlobal, kLocal, kPointwise };

struct ContractionSpec {
  ContractionScope scope = ContractionScope::kGlobal;
  double beta = 0.5;
  double r = 0.0;                 // kLocal: closed-ball radius
  Neighborhood neighborhood;      // kPointwise
  bool set_valued = false;
  std::size_t sweeps = 8;
};

// Local search from a random constant map, or from `start` when given
// (which must already satisfy the constraints; InputError otherwise). Every
// accepted move keeps each constrained pair at ratio <= beta under the base
// metric, so the matching certificate reports a modulus of at most beta.
SetValuedMap GenerateContraction(const FiniteMetricSpace& space,
                                 const ContractionSpec& spec, Rng& rng,
                                 const SetValuedMap* start = nullptr);

// Planar orbits of z -> c + lambda * R(theta) (z - c): `seeds` starting
// points at radius 0.9R..R around c, each followed for `depth` steps, plus
// c itself. The map follows the orbits and sends each orbit's last point
// to c. Pairs off the last step contract by exactly lambda (up to
// rounding); the seed annulus keeps the rest below lambda / (1 - lambda/0.9),
// so the global modulus is at most 0.9.
struct OrbitInstance {
  FiniteMetricSpace space;
  SetValuedMap map;
};

OrbitInstance RandomOrbitInstance(std::size_t seeds, std::size_t depth,
                                  double lambda, Rng& rng);

// Random walk of `hops` steps, each to a member of the current point's
// neighborhood. Stops early at a point with an empty neighborhood.
DiscretePath RandomWalkPath(const FiniteMetricSpace& space,
                            const Neighborhood& nb, std::size_t hops,
                            Rng& rng);

// Waypoints anywhere in the space, consecutive ones distinct.
DiscretePath RandomPath(const FiniteMetricSpace& space, std::size_t waypoints,
                        Rng& rng);

// Integer payoffs in [0, levels) so that ties are common.
Game RandomTableGame(const std::vector<std::size_t>& sizes, int levels,
                     Rng& rng);

// Two players on {0, 1/(n-1), ..., 1}, u_i = -(x_i - a - b x_{-i})^2.
Game QuadraticGame(double a, double b, std::size_t grid_points);

// 2x2: player 1 wants to match, player 2 wants to mismatch.
Game DiscoordinationGame();

// {2^-m, ..., 1/2, 1} with x -> max(x/2, 2^-m). Modulus 1/2.
SetValuedMap DyadicHalvingMap(int m);

// Clusters {1,2,4} and {21,22,24} on the line; F sends offset o in one
// cluster to offset max(o/2, 1) in the other. No fixed point, period 2.
SetValuedMap TwoClusterSwapMap();

}  // namespace metricfix

#endif  // METRICFIX_GENERATORS_H_
