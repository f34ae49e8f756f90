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

#include <vector>

#include "benchmark/benchmark.h"
#include "metricfix/contraction.h"
#include "metricfix/derived_metric.h"
#include "metricfix/game.h"
#include "metricfix/generators.h"
#include "metricfix/hausdorff.h"
#include "metricfix/metric_space.h"

namespace metricfix {
namespace {

void BM_Hausdorff(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const auto space = RandomEuclideanSpace(n, 2, rng);
  std::vector<PointIndex> left, right;
  for (PointIndex i = 0; i < n; ++i) (i % 2 ? left : right).push_back(i);
  const PointSet a(left, n), b(right, n);
  const MetricView m(space);
  for (auto _ : state) {
    benchmark::DoNotOptimize(HausdorffDistance(a, b, m));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Hausdorff)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_PathMetric(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const auto space = RandomEuclideanSpace(n, 2, rng);
  const double eps = 1.5 * ConnectivityScale(space);
  for (auto _ : state) {
    benchmark::DoNotOptimize(PathMetric(space, eps));
  }
}
BENCHMARK(BM_PathMetric)->RangeMultiplier(2)->Range(32, 512);

void BM_ChainMetric(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const auto space = RandomEuclideanSpace(n, 2, rng);
  const double r = 1.5 * ConnectivityScale(space);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ChainMetric(space, r));
  }
}
BENCHMARK(BM_ChainMetric)->RangeMultiplier(2)->Range(32, 512);

void BM_GlobalModulus(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  const auto space = RandomEuclideanSpace(n, 2, rng);
  const SetValuedMap f = RandomMap(space, 4, rng);
  const MetricView m(space);
  for (auto _ : state) {
    benchmark::DoNotOptimize(GlobalModulus(f, m));
  }
}
BENCHMARK(BM_GlobalModulus)->RangeMultiplier(2)->Range(32, 512);

void BM_BestResponseMap(benchmark::State& state) {
  const Game game =
      QuadraticGame(0.25, 0.5, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(BestResponseMap(game));
  }
}
BENCHMARK(BM_BestResponseMap)->Arg(11)->Arg(21)->Arg(41)->Arg(81);

void BM_NashEquilibria(benchmark::State& state) {
  Rng rng(4);
  const auto k = static_cast<std::size_t>(state.range(0));
  const Game game = RandomTableGame({k, k, k}, 5, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(NashEquilibria(game));
  }
}
BENCHMARK(BM_NashEquilibria)->Arg(5)->Arg(10)->Arg(20);

}  // namespace
}  // namespace metricfix

BENCHMARK_MAIN();
