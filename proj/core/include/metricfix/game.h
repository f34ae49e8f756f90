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

#ifndef METRICFIX_GAME_H_
#define METRICFIX_GAME_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "metricfix/contraction.h"
#include "metricfix/expression.h"
#include "metricfix/limits.h"
#include "metricfix/metric_space.h"
#include "metricfix/set_valued_map.h"
#include "metricfix/solver.h"

namespace metricfix {

inline constexpr double kDefaultTieTolerance = 1e-9;

// One strategy index per player.
using Profile = std::vector<std::size_t>;

// values[i][p] is player i's payoff at profile index p of the product grid
// (last player's strategy varies fastest).
struct PayoffTable {
  std::vector<std::vector<double>> values;
};

// formulas[i] is player i's payoff over variables x1..xn, bound to the
// numeric values of the strategy labels.
struct PayoffFormulas {
  std::vector<Expression> formulas;
};

using PayoffSource = std::variant<PayoffTable, PayoffFormulas>;

// A strategic-form game whose players choose points of finite metric
// spaces.
class Game {
 public:
  // Throws InputError when there are no players, when a table does not match
  // the profile grid, or when formulas meet non-numeric strategy labels.
  Game(std::vector<FiniteMetricSpace> strategy_spaces, PayoffSource payoffs,
       Combiner combiner = Combiner::kMax);

  std::size_t num_players() const { return spaces_.size(); }
  const FiniteMetricSpace& strategies(std::size_t player) const {
    return spaces_.at(player);
  }
  const std::vector<FiniteMetricSpace>& strategy_spaces() const {
    return spaces_;
  }
  const PayoffSource& payoffs() const { return payoffs_; }
  Combiner combiner() const { return combiner_; }
  const ProductShape& shape() const { return shape_; }

  // u_i(x). Throws EvaluationError from formula evaluation.
  double Payoff(std::size_t player, std::span<const std::size_t> profile) const;

  std::vector<std::string> ProfileLabels(const Profile& profile) const;

 private:
  std::vector<FiniteMetricSpace> spaces_;
  PayoffSource payoffs_;
  Combiner combiner_;
  ProductShape shape_;
  std::vector<std::vector<double>> numeric_labels_;  // formulas only
};

// Strategies of `player` within tie_tol of the best payoff against the
// other coordinates of `profile` (the player's own coordinate is ignored).
PointSet BestResponse(const Game& game, std::size_t player,
                      const Profile& profile,
                      double tie_tol = kDefaultTieTolerance);

// BR(x) = BR_1(x) x ... x BR_n(x) on ProductSpace(strategy spaces).
SetValuedMap BestResponseMap(const Game& game,
                             double tie_tol = kDefaultTieTolerance,
                             const Limits& limits = Limits());

// Pure equilibria as fixed points of the best-response map, ascending by
// profile index.
std::vector<Profile> NashEquilibria(const Game& game,
                                    double tie_tol = kDefaultTieTolerance,
                                    const Limits& limits = Limits());

// True when no player gains more than tie_tol by a unilateral deviation.
bool IsNashByDeviation(const Game& game, const Profile& profile,
                       double tie_tol = kDefaultTieTolerance);

// Every profile passing IsNashByDeviation, ascending by profile index.
std::vector<Profile> NashByDeviationScan(
    const Game& game, double tie_tol = kDefaultTieTolerance,
    const Limits& limits = Limits());

// Metric on the profile space used by the dynamics: the product metric, or
// its intrinsic path metric at scale eps.
struct DynamicsMetric {
  std::optional<double> path_eps;
  std::string Describe() const;
};

struct DynamicsResult {
  SolveTrace trace;
  std::vector<Profile> profiles;  // decoded iterates
  // Fixed-point outcome confirmed by the deviation scan.
  bool verified = false;
};

DynamicsResult NashViaDynamics(const Game& game, const Profile& start,
                               double tie_tol, std::size_t max_iter,
                               const DynamicsMetric& metric = {},
                               const Limits& limits = Limits());

enum class GameCondition { kA, kB, kC };

std::string_view GameConditionName(GameCondition condition);

struct CertifyParams {
  std::optional<double> r;                    // condition (a)
  std::optional<double> eps;                  // conditions (b), (c)
  std::optional<Neighborhood> neighborhood;   // (b), (c); default radius:eps
  double tie_tol = kDefaultTieTolerance;
  Limits limits;
};

struct SpaceCheck {
  std::string name;
  double scale = 0.0;
  bool holds = false;
  std::size_t components = 0;
};

struct CertifyReport {
  GameCondition condition = GameCondition::kA;
  // Hypotheses that hold automatically on finite spaces.
  std::vector<std::string> satisfied_by_finiteness;
  std::vector<SpaceCheck> space_checks;
  ContractionCertificate br_certificate;
  // (b), (c): best responses shrink under the path metric at eps.
  std::optional<ContractionCertificate> shrinking;
  std::optional<Neighborhood> neighborhood;
  bool verdict = false;
  std::vector<std::string> failures;
};

// Runs the space checks and best-response certificate for one of the three
// contractive-game conditions:
//   (a) r-chainable profile space, BR a (beta, r)-uniform local contraction;
//   (b) eps-connected, BR a uniform pointwise contraction under the product
//       metric, and shrinking under the path metric at eps;
//   (c) the path metric at eps connects every pair, BR a pointwise
//       contraction, and shrinking under that path metric.
// Throws InputError when the condition's scale is missing.
CertifyReport CertifyContractive(const Game& game,
                                 GameCondition condition,
                                 const CertifyParams& params);

}  // namespace metricfix

#endif  // METRICFIX_GAME_H_
