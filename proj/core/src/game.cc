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

#include "metricfix/game.h"

#include <charconv>
#include <string>
#include <utility>

#include "metricfix/derived_metric.h"
#include "metricfix/errors.h"
#include "metricfix/hausdorff.h"

namespace metricfix {
namespace {

std::vector<std::size_t> Sizes(const std::vector<FiniteMetricSpace>& spaces) {
  std::vector<std::size_t> sizes;
  for (const auto& s : spaces) sizes.push_back(s.size());
  return sizes;
}

double ParseNumericLabel(const std::string& label, std::size_t player) {
  double value = 0.0;
  const char* end = label.data() + label.size();
  auto [ptr, ec] = std::from_chars(label.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InputError("formula payoffs need numeric strategy labels; player " +
                     std::to_string(player + 1) + " has '" + label + "'");
  }
  return value;
}

void CheckProfile(const Game& game, const Profile& profile) {
  if (profile.size() != game.num_players()) {
    throw InputError("profile has " + std::to_string(profile.size()) +
                     " entries for " + std::to_string(game.num_players()) +
                     " players");
  }
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] >= game.strategies(i).size()) {
      throw InputError("strategy index " + std::to_string(profile[i]) +
                       " out of range for player " + std::to_string(i + 1));
    }
  }
}

// Strategies of `player` whose payoff is within tie_tol of the best, given
// the payoff of each alternative.
std::vector<PointIndex> ArgmaxWithin(const std::vector<double>& values,
                                     double tie_tol) {
  double best = values.front();
  for (double v : values) best = std::max(best, v);
  std::vector<PointIndex> members;
  for (PointIndex s = 0; s < values.size(); ++s) {
    if (best - values[s] <= tie_tol) members.push_back(s);
  }
  return members;
}

void CheckTieTolerance(double tie_tol) {
  if (!(tie_tol >= 0.0)) throw InputError("tie tolerance must be >= 0");
}

}  // namespace

Game::Game(std::vector<FiniteMetricSpace> strategy_spaces,
           PayoffSource payoffs, Combiner combiner)
    : spaces_(std::move(strategy_spaces)),
      payoffs_(std::move(payoffs)),
      combiner_(combiner),
      shape_(Sizes(spaces_)) {
  if (spaces_.empty()) throw InputError("a game needs at least one player");
  const std::size_t n = spaces_.size();
  if (const auto* table = std::get_if<PayoffTable>(&payoffs_)) {
    if (table->values.size() != n) {
      throw InputError("payoff table has " +
                       std::to_string(table->values.size()) +
                       " players, expected " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (table->values[i].size() != shape_.total()) {
        throw InputError("payoff table for player " + std::to_string(i + 1) +
                         " has " + std::to_string(table->values[i].size()) +
                         " entries, expected " +
                         std::to_string(shape_.total()));
      }
    }
  } else {
    const auto& formulas = std::get<PayoffFormulas>(payoffs_).formulas;
    if (formulas.size() != n) {
      throw InputError("expected one payoff formula per player");
    }
    numeric_labels_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& label : spaces_[i].labels()) {
        numeric_labels_[i].push_back(ParseNumericLabel(label, i));
      }
    }
  }
}

double Game::Payoff(std::size_t player,
                    std::span<const std::size_t> profile) const {
  if (player >= num_players()) throw InputError("no such player");
  if (const auto* table = std::get_if<PayoffTable>(&payoffs_)) {
    return table->values[player][shape_.Encode(profile)];
  }
  if (profile.size() != num_players()) {
    throw InputError("profile has the wrong number of entries");
  }
  std::vector<double> x(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] >= numeric_labels_[i].size()) {
      throw InputError("strategy index out of range");
    }
    x[i] = numeric_labels_[i][profile[i]];
  }
  return std::get<PayoffFormulas>(payoffs_).formulas[player].Evaluate(x);
}

std::vector<std::string> Game::ProfileLabels(const Profile& profile) const {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    labels.push_back(spaces_.at(i).label(profile[i]));
  }
  return labels;
}

PointSet BestResponse(const Game& game, std::size_t player,
                      const Profile& profile, double tie_tol) {
  CheckTieTolerance(tie_tol);
  CheckProfile(game, profile);
  if (player >= game.num_players()) throw InputError("no such player");
  const std::size_t options = game.strategies(player).size();
  Profile alt = profile;
  std::vector<double> values(options);
  for (std::size_t s = 0; s < options; ++s) {
    alt[player] = s;
    values[s] = game.Payoff(player, alt);
  }
  return PointSet(ArgmaxWithin(values, tie_tol), options);
}

SetValuedMap BestResponseMap(const Game& game, double tie_tol,
                             const Limits& limits) {
  CheckTieTolerance(tie_tol);
  FiniteMetricSpace profiles =
      ProductSpace(game.strategy_spaces(), game.combiner(), limits);
  const ProductShape& shape = game.shape();
  const std::size_t total = shape.total();
  const std::size_t n = game.num_players();

  std::vector<std::vector<double>> payoff(n, std::vector<double>(total));
  for (std::size_t p = 0; p < total; ++p) {
    const Profile x = shape.Decode(p);
    for (std::size_t i = 0; i < n; ++i) payoff[i][p] = game.Payoff(i, x);
  }

  std::vector<PointSet> images;
  images.reserve(total);
  std::vector<std::vector<PointIndex>> per_player(n);
  std::vector<double> values;
  for (std::size_t p = 0; p < total; ++p) {
    for (std::size_t i = 0; i < n; ++i) {
      values.resize(shape.size(i));
      for (std::size_t s = 0; s < shape.size(i); ++s) {
        values[s] = payoff[i][shape.WithCoordinate(p, i, s)];
      }
      per_player[i] = ArgmaxWithin(values, tie_tol);
    }
    // Cartesian product of the per-player sets, as profile indices.
    std::vector<std::size_t> members = {0};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> next;
      next.reserve(members.size() * per_player[i].size());
      for (std::size_t base : members) {
        for (PointIndex s : per_player[i]) {
          next.push_back(shape.WithCoordinate(base, i, s));
        }
      }
      members = std::move(next);
    }
    images.emplace_back(std::move(members), total);
  }
  return SetValuedMap(std::move(profiles), std::move(images));
}

std::vector<Profile> NashEquilibria(const Game& game, double tie_tol,
                                    const Limits& limits) {
  const SetValuedMap br = BestResponseMap(game, tie_tol, limits);
  std::vector<Profile> out;
  for (PointIndex p : FixedPoints(br)) out.push_back(game.shape().Decode(p));
  return out;
}

bool IsNashByDeviation(const Game& game, const Profile& profile,
                       double tie_tol) {
  CheckTieTolerance(tie_tol);
  CheckProfile(game, profile);
  Profile alt = profile;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    const double current = game.Payoff(i, profile);
    for (std::size_t s = 0; s < game.strategies(i).size(); ++s) {
      if (s == profile[i]) continue;
      alt[i] = s;
      if (game.Payoff(i, alt) - current > tie_tol) return false;
    }
    alt[i] = profile[i];
  }
  return true;
}

std::vector<Profile> NashByDeviationScan(const Game& game, double tie_tol,
                                         const Limits& limits) {
  if (game.shape().total() > limits.max_product_points) {
    throw ResourceError("profile space exceeds the cap of " +
                        std::to_string(limits.max_product_points));
  }
  std::vector<Profile> out;
  for (std::size_t p = 0; p < game.shape().total(); ++p) {
    Profile x = game.shape().Decode(p);
    if (IsNashByDeviation(game, x, tie_tol)) out.push_back(std::move(x));
  }
  return out;
}

std::string DynamicsMetric::Describe() const {
  return path_eps ? "path:" + FormatReal(*path_eps) : "base";
}

DynamicsResult NashViaDynamics(const Game& game, const Profile& start,
                               double tie_tol, std::size_t max_iter,
                               const DynamicsMetric& metric,
                               const Limits& limits) {
  CheckProfile(game, start);
  const SetValuedMap br = BestResponseMap(game, tie_tol, limits);
  const PointIndex x0 = game.shape().Encode(start);
  DynamicsResult result;
  if (metric.path_eps) {
    const DerivedMetric path = PathMetric(br.space(), *metric.path_eps, limits);
    result.trace = SolveFixedPoint(br, MetricView(path), x0, max_iter);
  } else {
    result.trace = SolveFixedPoint(br, MetricView(br.space()), x0, max_iter);
  }
  for (PointIndex p : result.trace.iterates) {
    result.profiles.push_back(game.shape().Decode(p));
  }
  if (result.trace.outcome == SolveOutcome::kFixedPoint) {
    result.verified = IsNashByDeviation(
        game, game.shape().Decode(*result.trace.fixed_point), tie_tol);
  }
  return result;
}

std::string_view GameConditionName(GameCondition condition) {
  switch (condition) {
    case GameCondition::kA:
      return "a";
    case GameCondition::kB:
      return "b";
    case GameCondition::kC:
      return "c";
  }
  return "a";
}

CertifyReport CertifyContractive(const Game& game,
                                 GameCondition condition,
                                 const CertifyParams& params) {
  CertifyReport report;
  report.condition = condition;
  const SetValuedMap br = BestResponseMap(game, params.tie_tol, params.limits);
  const FiniteMetricSpace& profiles = br.space();
  const MetricView base(profiles);

  if (condition == GameCondition::kA) {
    if (!params.r) throw InputError("condition (a) needs the chain scale r");
    report.satisfied_by_finiteness = {"(X,d) compact (finite)",
                                      "BR(x) compact (finite)"};
    const ChainabilityResult chain = IsRChainable(profiles, *params.r);
    report.space_checks.push_back({"r-chainable", *params.r, chain.chainable,
                                   chain.components.num_classes()});
    report.br_certificate = LocalCertificate(br, base, *params.r);
    if (!chain.chainable) {
      report.failures.push_back("profile space is not r-chainable");
    }
    if (!report.br_certificate.holds) {
      report.failures.push_back("BR is not a uniform local contraction");
    }
  } else {
    if (!params.eps) {
      throw InputError(std::string("condition (") +
                       std::string(GameConditionName(condition)) +
                       ") needs the path scale eps");
    }
    const double eps = *params.eps;
    const Neighborhood nb =
        params.neighborhood.value_or(Neighborhood::Radius(eps));
    report.neighborhood = nb;
    const DerivedMetric path = PathMetric(profiles, eps, params.limits);
    if (condition == GameCondition::kB) {
      report.satisfied_by_finiteness = {"(X,d) complete (finite)",
                                        "BR(x) compact (finite)"};
      const ChainabilityResult chain = IsRChainable(profiles, eps);
      report.space_checks.push_back({"eps-path-connected", eps,
                                     chain.chainable,
                                     chain.components.num_classes()});
    } else {
      report.satisfied_by_finiteness = {"(X,d_r) compact (finite)",
                                        "BR(x) compact (finite)"};
      report.space_checks.push_back(
          {"path-metric-connected", eps,
           path.components().num_classes() == 1,
           path.components().num_classes()});
    }
    report.br_certificate = PointwiseCertificate(br, base, nb);
    report.shrinking = ShrinkingCertificate(br, MetricView(path));
    if (!report.space_checks.back().holds) {
      report.failures.push_back("profile space is not connected at eps");
    }
    const bool pointwise_ok =
        report.br_certificate.holds &&
        (condition == GameCondition::kC || report.br_certificate.uniform);
    if (!pointwise_ok) {
      report.failures.push_back(condition == GameCondition::kB
                                    ? "BR is not a uniform pointwise contraction"
                                    : "BR is not a pointwise contraction");
    }
    if (!report.shrinking->holds) {
      report.failures.push_back("BR is not shrinking under the path metric");
    }
  }
  report.verdict = report.failures.empty();
  return report;
}

}  // namespace metricfix
