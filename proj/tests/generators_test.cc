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

#include <vector>

#include "gtest/gtest.h"
#include "metricfix/contraction.h"
#include "metricfix/errors.h"

namespace metricfix {
namespace {

TEST(GeneratorsTest, SeedsReproduce) {
  Rng a(11), b(11);
  EXPECT_EQ(RandomEuclideanSpace(20, 3, a), RandomEuclideanSpace(20, 3, b));
  EXPECT_EQ(RandomMap(RandomTableSpace(8, a), 3, a),
            RandomMap(RandomTableSpace(8, b), 3, b));
}

TEST(GeneratorsTest, SpacesAreMetrics) {
  Rng rng(12);
  EXPECT_TRUE(ValidateMetric(RandomEuclideanSpace(15, 2, rng)).passed);
  EXPECT_TRUE(ValidateMetric(RandomTableSpace(15, rng)).passed);
  EXPECT_EQ(UniformGrid(21).label(3), "0.15");
  EXPECT_THROW(UniformGrid(1), InputError);
}

TEST(GenerateContractionTest, EachScopeIsCertified) {
  Rng rng(13);
  for (int rep = 0; rep < 20; ++rep) {
    const auto space = RandomEuclideanSpace(25, 2, rng);
    const MetricView m(space);
    ContractionSpec spec;
    spec.beta = 0.7;
    spec.set_valued = rep % 2 == 1;
    EXPECT_LE(GlobalModulus(GenerateContraction(space, spec, rng), m).modulus,
              0.7);
    spec.scope = ContractionScope::kLocal;
    spec.r = ConnectivityScale(space);
    EXPECT_LE(LocalCertificate(GenerateContraction(space, spec, rng), m, spec.r)
                  .modulus,
              0.7);
    spec.scope = ContractionScope::kPointwise;
    spec.neighborhood = Neighborhood::Nearest(3);
    EXPECT_LE(PointwiseCertificate(GenerateContraction(space, spec, rng), m,
                                   spec.neighborhood)
                  .modulus,
              0.7);
  }
}

TEST(GenerateContractionTest, RejectsBadInput) {
  Rng rng(14);
  const auto space = RandomEuclideanSpace(5, 2, rng);
  ContractionSpec spec;
  spec.beta = 1.0;
  EXPECT_THROW(GenerateContraction(space, spec, rng), InputError);
  spec.beta = 0.5;
  spec.scope = ContractionScope::kLocal;
  EXPECT_THROW(GenerateContraction(space, spec, rng), InputError);
  spec.scope = ContractionScope::kGlobal;
  const auto id = SetValuedMap::Identity(space);
  EXPECT_THROW(GenerateContraction(space, spec, rng, &id), InputError);
}

TEST(OrbitInstanceTest, ModulusBound) {
  Rng rng(15);
  for (int rep = 0; rep < 100; ++rep) {
    const double lambda = 0.05 + 0.004 * rep;
    const auto inst = RandomOrbitInstance(1 + rep % 5, rep % 6, lambda, rng);
    const auto cert = GlobalModulus(inst.map, MetricView(inst.space));
    EXPECT_LE(cert.modulus, lambda / (1 - lambda / 0.9) + 1e-12);
    EXPECT_EQ(FixedPoints(inst.map), std::vector<PointIndex>{0});
  }
  EXPECT_THROW(RandomOrbitInstance(2, 2, 0.5, rng), InputError);
}

TEST(RandomPathTest, WalksStayInNeighborhoods) {
  Rng rng(16);
  const auto space = RandomEuclideanSpace(30, 2, rng);
  const Neighborhood nb = Neighborhood::Nearest(2);
  for (int rep = 0; rep < 20; ++rep) {
    const DiscretePath p = RandomWalkPath(space, nb, 10, rng);
    EXPECT_EQ(p.size(), 11u);
    for (std::size_t k = 1; k < p.size(); ++k) {
      const auto hood =
          NeighborhoodMembers(MetricView(space), p.waypoints()[k - 1], nb);
      EXPECT_TRUE(std::find(hood.begin(), hood.end(), p.waypoints()[k]) !=
                  hood.end());
    }
    EXPECT_EQ(RandomPath(space, 7, rng).size(), 7u);
  }
}

TEST(GameBuildersTest, Shapes) {
  Rng rng(17);
  const Game g = RandomTableGame({2, 3, 4}, 3, rng);
  EXPECT_EQ(g.shape().total(), 24u);
  EXPECT_EQ(QuadraticGame(0.25, 0.5, 21).strategies(1).size(), 21u);
  EXPECT_EQ(DiscoordinationGame().num_players(), 2u);
}

}  // namespace
}  // namespace metricfix
