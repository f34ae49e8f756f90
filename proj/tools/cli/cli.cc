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

#include "cli.h"

#include <chrono>
#include <charconv>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "CLI11.hpp"
#include "json_io.h"
#include "metricfix/contraction.h"
#include "metricfix/derived_metric.h"
#include "metricfix/errors.h"
#include "metricfix/game.h"
#include "metricfix/generators.h"
#include "metricfix/hausdorff.h"
#include "metricfix/limits.h"
#include "metricfix/set_valued_map.h"
#include "metricfix/solver.h"

namespace metricfix::cli {
namespace {

struct Options {
  std::string in = "-";
  std::string format = "json";
  // space
  double tol = kDefaultTriangleTolerance;
  bool convexity = false;
  std::size_t max_witnesses = 50;
  std::optional<std::string> combiner;
  // metric
  std::optional<double> r;
  std::optional<double> eps;
  std::string from;
  std::string to;
  // map
  std::string metric = "base";
  std::optional<std::string> neighborhood;
  std::optional<double> local_r;
  std::optional<double> slope_h;
  std::string x0;
  std::size_t max_iter = 1000;
  int max_period = 8;
  // game
  std::string profile;
  double tie_tol = kDefaultTieTolerance;
  std::string mode = "enumerate";
  std::string condition;
  // gen
  std::uint64_t seed = 0;
  std::size_t n = 10;
  std::size_t dim = 2;
  std::string kind;
  std::optional<std::string> space_file;
  std::string scope = "global";
  double beta = 0.5;
  bool set_valued = false;
  std::size_t sweeps = 8;
  std::size_t max_image = 2;
  std::string sizes = "3,3";
  int levels = 3;
  double a = 0.25;
  double b = 0.5;
  std::size_t grid = 21;
  bool raw = false;
};

struct Context {
  const Options& opt;
  Limits limits;
  Json& config;
  Json& result;
};

using Handler = std::function<int(Context&)>;

double ParseReal(std::string_view text, std::string_view what) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw InputError(std::string(what) + ": '" + std::string(text) +
                     "' is not a number");
  }
  return value;
}

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream stream(text);
  while (std::getline(stream, current, ',')) parts.push_back(current);
  return parts;
}

// Metric view named on the command line: base | chain:r | path:eps. Holds
// the derived table, if any, for the lifetime of the view.
class ViewSpec {
 public:
  ViewSpec(const FiniteMetricSpace& space, const std::string& spec,
           const Limits& limits)
      : space_(space) {
    if (spec == "base") return;
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
      throw InputError("metric must be base, chain:r or path:eps, got '" +
                       spec + "'");
    }
    const std::string kind = spec.substr(0, colon);
    const double scale = ParseReal(spec.substr(colon + 1), "metric scale");
    if (kind == "chain") {
      derived_.emplace(ChainMetric(space, scale, limits));
    } else if (kind == "path") {
      derived_.emplace(PathMetric(space, scale, limits));
    } else {
      throw InputError("unknown metric kind '" + kind + "'");
    }
  }
  ViewSpec(const ViewSpec&) = delete;
  ViewSpec& operator=(const ViewSpec&) = delete;

  MetricView view() const {
    return derived_ ? MetricView(*derived_) : MetricView(space_);
  }

 private:
  const FiniteMetricSpace& space_;
  std::optional<DerivedMetric> derived_;
};

Neighborhood ParseNeighborhood(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  if (colon == std::string::npos) {
    throw InputError("neighborhood must be knn:k or radius:x");
  }
  const std::string value = spec.substr(colon + 1);
  if (kind == "knn") {
    const double k = ParseReal(value, "knn");
    if (!(k >= 1.0) || k != static_cast<double>(static_cast<std::size_t>(k))) {
      throw InputError("knn needs a positive integer");
    }
    return Neighborhood::Nearest(static_cast<std::size_t>(k));
  }
  if (kind == "radius") {
    const double radius = ParseReal(value, "radius");
    if (!(radius > 0.0)) throw InputError("radius must be > 0");
    return Neighborhood::Radius(radius);
  }
  throw InputError("unknown neighborhood kind '" + kind + "'");
}

PointIndex FindLabel(const FiniteMetricSpace& space, const std::string& label,
                     const std::string& what) {
  if (label.empty()) throw InputError(what + " is required");
  const auto index = space.Find(label);
  if (!index) throw InputError(what + ": unknown point '" + label + "'");
  return *index;
}

Profile ParseProfile(const Game& game, const std::string& text,
                     const std::string& what) {
  if (text.empty()) throw InputError(what + " is required");
  const auto parts = SplitCommas(text);
  if (parts.size() != game.num_players()) {
    throw InputError(what + " needs " + std::to_string(game.num_players()) +
                     " comma-separated strategies");
  }
  Profile profile;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    profile.push_back(FindLabel(game.strategies(i), parts[i],
                                what + " (player " + std::to_string(i + 1) +
                                    ")"));
  }
  return profile;
}

Json ProfileJson(const Game& game, const Profile& profile) {
  return Json(game.ProfileLabels(profile));
}

std::filesystem::path BaseDir(const std::string& in) {
  if (in == "-") return {};
  return std::filesystem::path(in).parent_path();
}

const FiniteMetricSpace& CheckSpaceCap(const FiniteMetricSpace& space,
                                       const Limits& limits) {
  if (space.size() > limits.max_space_points) {
    throw ResourceError("space has " + std::to_string(space.size()) +
                        " points, cap is " +
                        std::to_string(limits.max_space_points));
  }
  return space;
}

FiniteMetricSpace LoadSpace(Context& ctx) {
  return CheckSpaceCap(
      SpaceFromJson(ReadDocument(ctx.opt.in), BaseDir(ctx.opt.in)),
      ctx.limits);
}
SetValuedMap LoadMap(Context& ctx) {
  SetValuedMap f = MapFromJson(ReadDocument(ctx.opt.in), BaseDir(ctx.opt.in));
  CheckSpaceCap(f.space(), ctx.limits);
  return f;
}
Game LoadGame(Context& ctx) {
  Game game = GameFromJson(ReadDocument(ctx.opt.in), BaseDir(ctx.opt.in));
  for (const auto& s : game.strategy_spaces()) CheckSpaceCap(s, ctx.limits);
  return game;
}

double RequireScale(const std::optional<double>& value, const char* flag) {
  if (!value) throw InputError(std::string(flag) + " is required");
  if (!(*value > 0.0)) throw InputError(std::string(flag) + " must be > 0");
  return *value;
}

// ---- space ---------------------------------------------------------------

int SpaceCheck(Context& ctx) {
  const FiniteMetricSpace space = LoadSpace(ctx);
  ctx.config["tol"] = ctx.opt.tol;
  ctx.config["convexity"] = ctx.opt.convexity;
  ctx.config["max_witnesses"] = ctx.opt.max_witnesses;
  const ValidationReport report = ValidateMetric(space, ctx.opt.tol);
  ctx.result["points"] = space.size();
  ctx.result["valid"] = report.passed;
  ctx.result["violation_count"] = report.violations.size();
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    if (violations.size() >= ctx.opt.max_witnesses) break;
    violations.push_back({{"axiom", v.axiom},
                          {"witness", Labels(space, v.witness)},
                          {"magnitude", v.magnitude}});
  }
  ctx.result["violations"] = std::move(violations);
  ctx.result["diameter"] = space.Diameter();
  ctx.result["connectivity_scale"] = ConnectivityScale(space);
  if (ctx.opt.convexity) {
    const ConvexityReport convex = CheckMetricConvexity(space, ctx.opt.tol);
    Json failing = Json::array();
    for (const auto& pair : convex.pairs) {
      if (!pair.passes) {
        failing.push_back({space.label(pair.x), space.label(pair.y)});
      }
    }
    ctx.result["convexity"] = {{"all_pass", convex.all_pass},
                               {"failing_pairs", std::move(failing)}};
  }
  return report.passed ? kExitOk : kExitNegative;
}

int SpaceProduct(Context& ctx) {
  const Json doc = ReadDocument(ctx.opt.in);
  const Json* factors_doc = &doc;
  Combiner combiner = Combiner::kMax;
  if (doc.is_object()) {
    if (!doc.contains("factors")) {
      throw InputError("product document is missing \"factors\"");
    }
    factors_doc = &doc["factors"];
    if (doc.contains("combiner") && doc["combiner"].is_string()) {
      const auto parsed = ParseCombiner(doc["combiner"].get<std::string>());
      if (!parsed) throw InputError("unknown combiner in document");
      combiner = *parsed;
    }
  }
  if (ctx.opt.combiner) {
    const auto parsed = ParseCombiner(*ctx.opt.combiner);
    if (!parsed) throw InputError("unknown combiner '" + *ctx.opt.combiner + "'");
    combiner = *parsed;
  }
  if (!factors_doc->is_array() || factors_doc->empty()) {
    throw InputError("product needs a nonempty array of space documents");
  }
  std::vector<FiniteMetricSpace> factors;
  for (const Json& f : *factors_doc) {
    factors.push_back(SpaceFromJson(f, BaseDir(ctx.opt.in)));
  }
  ctx.config["combiner"] = std::string(CombinerName(combiner));
  const FiniteMetricSpace product = ProductSpace(factors, combiner, ctx.limits);
  if (product.size() > ctx.limits.max_space_points) {
    throw ResourceError("product has " + std::to_string(product.size()) +
                        " points; emitting its table is capped at " +
                        std::to_string(ctx.limits.max_space_points));
  }
  Json sizes = Json::array();
  for (const auto& f : factors) sizes.push_back(f.size());
  ctx.result["sizes"] = std::move(sizes);
  ctx.result["space"] = SpaceToJson(product);
  return kExitOk;
}

// ---- metric --------------------------------------------------------------

int MetricDerived(Context& ctx, DerivedKind kind) {
  const FiniteMetricSpace space = LoadSpace(ctx);
  const char* flag = kind == DerivedKind::kChain ? "--r" : "--eps";
  const double scale = RequireScale(
      kind == DerivedKind::kChain ? ctx.opt.r : ctx.opt.eps, flag);
  ctx.config[kind == DerivedKind::kChain ? "r" : "eps"] = scale;
  const DerivedMetric metric = kind == DerivedKind::kChain
                                   ? ChainMetric(space, scale, ctx.limits)
                                   : PathMetric(space, scale, ctx.limits);
  ctx.result = DerivedToJson(metric);
  return kExitOk;
}

int MetricGeodesic(Context& ctx) {
  const FiniteMetricSpace space = LoadSpace(ctx);
  const double eps = RequireScale(ctx.opt.eps, "--eps");
  const PointIndex x = FindLabel(space, ctx.opt.from, "--from");
  const PointIndex y = FindLabel(space, ctx.opt.to, "--to");
  ctx.config["eps"] = eps;
  ctx.config["from"] = ctx.opt.from;
  ctx.config["to"] = ctx.opt.to;
  try {
    const DiscretePath path = Geodesic(space, eps, x, y);
    ctx.result["reachable"] = true;
    ctx.result["path"] = PathToJson(path, space);
    return kExitOk;
  } catch (const NoPathError& e) {
    ctx.result["reachable"] = false;
    ctx.result["path"] = nullptr;
    return kExitNegative;
  }
}

// ---- map -----------------------------------------------------------------

int MapAnalyze(Context& ctx) {
  const SetValuedMap f = LoadMap(ctx);
  const FiniteMetricSpace& space = f.space();
  const ViewSpec spec(space, ctx.opt.metric, ctx.limits);
  const MetricView m = spec.view();
  const Neighborhood nb =
      ParseNeighborhood(ctx.opt.neighborhood.value_or("knn:1"));
  double default_scale = ConnectivityScale(space);
  if (!(default_scale > 0.0)) default_scale = 1.0;
  const double local_r = ctx.opt.local_r.value_or(default_scale);
  const double slope_h = ctx.opt.slope_h.value_or(default_scale);
  if (!(local_r > 0.0) || !(slope_h > 0.0)) {
    throw InputError("--local-r and --slope-h must be > 0");
  }
  ctx.config["metric"] = m.Describe();
  ctx.config["neighborhood"] = nb.Describe();
  ctx.config["local_r"] = local_r;
  ctx.config["slope_h"] = slope_h;
  ctx.config["strictness_tolerance"] = kStrictnessTolerance;

  const auto global = GlobalModulus(f, m);
  const auto pointwise = PointwiseCertificate(f, m, nb);
  const auto local = LocalCertificate(f, m, local_r);
  const auto shrinking = ShrinkingCertificate(f, m);
  const SlopeTable slope = DiscreteSlope(f, m, slope_h);

  ctx.result["points"] = space.size();
  ctx.result["singleton_valued"] = f.singleton_valued();
  ctx.result["global"] = CertificateToJson(global, space);
  ctx.result["pointwise"] = CertificateToJson(pointwise, space);
  ctx.result["local"] = CertificateToJson(local, space);
  ctx.result["shrinking"] = CertificateToJson(shrinking, space);
  Json slopes = Json::object();
  Json isolated = Json::array();
  for (PointIndex x = 0; x < space.size(); ++x) {
    slopes[space.label(x)] = slope.slope[x];
    if (slope.isolated[x]) isolated.push_back(space.label(x));
  }
  ctx.result["slope"] = {{"scale", slope.scale},
                         {"values", std::move(slopes)},
                         {"isolated", std::move(isolated)}};
  ctx.result["fixed_points"] = Labels(space, FixedPoints(f));
  const bool any = global.holds || pointwise.holds || local.holds ||
                   shrinking.holds;
  return any ? kExitOk : kExitNegative;
}

int MapFix(Context& ctx) {
  const SetValuedMap f = LoadMap(ctx);
  const auto fixed = FixedPoints(f);
  ctx.result["status"] = fixed.empty() ? "none" : "found";
  ctx.result["fixed_points"] = Labels(f.space(), fixed);
  return fixed.empty() ? kExitNegative : kExitOk;
}

int MapSolve(Context& ctx) {
  const SetValuedMap f = LoadMap(ctx);
  const ViewSpec spec(f.space(), ctx.opt.metric, ctx.limits);
  const PointIndex x0 = FindLabel(f.space(), ctx.opt.x0, "--x0");
  ctx.config["metric"] = spec.view().Describe();
  ctx.config["x0"] = ctx.opt.x0;
  ctx.config["max_iter"] = ctx.opt.max_iter;
  const SolveTrace trace =
      SolveFixedPoint(f, spec.view(), x0, ctx.opt.max_iter);
  ctx.result = TraceToJson(trace, f.space());
  return trace.outcome == SolveOutcome::kFixedPoint ? kExitOk
                                                    : kExitNegative;
}

int MapPeriodic(Context& ctx) {
  const SetValuedMap f = LoadMap(ctx);
  ctx.config["max_period"] = ctx.opt.max_period;
  const auto found = FindPeriodicPoint(f, ctx.opt.max_period);
  ctx.result["found"] = found.has_value();
  ctx.result["point"] =
      found ? Json(f.space().label(found->point)) : Json(nullptr);
  ctx.result["period"] = found ? Json(found->period) : Json(nullptr);
  return found ? kExitOk : kExitNegative;
}

// ---- game ----------------------------------------------------------------

Json EquilibriaJson(const Game& game, const std::vector<Profile>& profiles) {
  Json out = Json::array();
  for (const auto& p : profiles) out.push_back(ProfileJson(game, p));
  return out;
}

int GameBr(Context& ctx) {
  const Game game = LoadGame(ctx);
  const Profile profile = ParseProfile(game, ctx.opt.profile, "--profile");
  ctx.config["profile"] = ctx.opt.profile;
  ctx.config["tie_tol"] = ctx.opt.tie_tol;
  Json responses = Json::array();
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    const PointSet br = BestResponse(game, i, profile, ctx.opt.tie_tol);
    responses.push_back(
        {{"player", i + 1}, {"strategies", Labels(game.strategies(i), br)}});
  }
  ctx.result["profile"] = ProfileJson(game, profile);
  ctx.result["best_responses"] = std::move(responses);
  ctx.result["is_nash"] = IsNashByDeviation(game, profile, ctx.opt.tie_tol);
  return kExitOk;
}

int GameNash(Context& ctx) {
  const Game game = LoadGame(ctx);
  ctx.config["mode"] = ctx.opt.mode;
  ctx.config["tie_tol"] = ctx.opt.tie_tol;
  if (ctx.opt.mode == "enumerate") {
    const auto equilibria = NashEquilibria(game, ctx.opt.tie_tol, ctx.limits);
    const auto oracle = NashByDeviationScan(game, ctx.opt.tie_tol, ctx.limits);
    ctx.result["equilibria"] = EquilibriaJson(game, equilibria);
    ctx.result["oracle_agrees"] = equilibria == oracle;
    return equilibria.empty() ? kExitNegative : kExitOk;
  }
  if (ctx.opt.mode != "dynamics") {
    throw InputError("--mode must be enumerate or dynamics");
  }
  const Profile start = ParseProfile(game, ctx.opt.x0, "--x0");
  DynamicsMetric metric;
  if (ctx.opt.metric != "base") {
    if (ctx.opt.metric.rfind("path:", 0) != 0) {
      throw InputError("dynamics metric must be base or path:eps");
    }
    metric.path_eps = ParseReal(ctx.opt.metric.substr(5), "path scale");
    RequireScale(metric.path_eps, "path scale");
  }
  ctx.config["x0"] = ctx.opt.x0;
  ctx.config["max_iter"] = ctx.opt.max_iter;
  ctx.config["metric"] = metric.Describe();
  const DynamicsResult dyn = NashViaDynamics(
      game, start, ctx.opt.tie_tol, ctx.opt.max_iter, metric, ctx.limits);
  const FiniteMetricSpace profiles =
      ProductSpace(game.strategy_spaces(), game.combiner(), ctx.limits);
  ctx.result = TraceToJson(dyn.trace, profiles);
  ctx.result["profiles"] = EquilibriaJson(game, dyn.profiles);
  ctx.result["verified"] = dyn.verified;
  return dyn.verified ? kExitOk : kExitNegative;
}

int GameCertify(Context& ctx) {
  const Game game = LoadGame(ctx);
  GameCondition condition;
  if (ctx.opt.condition == "a") {
    condition = GameCondition::kA;
  } else if (ctx.opt.condition == "b") {
    condition = GameCondition::kB;
  } else if (ctx.opt.condition == "c") {
    condition = GameCondition::kC;
  } else {
    throw InputError("--condition must be a, b or c");
  }
  CertifyParams params;
  params.tie_tol = ctx.opt.tie_tol;
  params.limits = ctx.limits;
  if (condition == GameCondition::kA) {
    params.r = RequireScale(ctx.opt.r, "--r");
    ctx.config["r"] = *params.r;
  } else {
    params.eps = RequireScale(ctx.opt.eps, "--eps");
    ctx.config["eps"] = *params.eps;
    if (ctx.opt.neighborhood) {
      params.neighborhood = ParseNeighborhood(*ctx.opt.neighborhood);
    }
  }
  ctx.config["condition"] = ctx.opt.condition;
  ctx.config["tie_tol"] = ctx.opt.tie_tol;
  ctx.config["strictness_tolerance"] = kStrictnessTolerance;
  const CertifyReport report = CertifyContractive(game, condition, params);
  if (report.neighborhood) {
    ctx.config["neighborhood"] = report.neighborhood->Describe();
  }
  const FiniteMetricSpace profiles =
      ProductSpace(game.strategy_spaces(), game.combiner(), ctx.limits);
  ctx.result = CertifyReportToJson(report, profiles);
  if (report.verdict) {
    ctx.result["equilibria"] = EquilibriaJson(
        game, NashEquilibria(game, ctx.opt.tie_tol, ctx.limits));
  }
  return report.verdict ? kExitOk : kExitNegative;
}

// ---- gen -----------------------------------------------------------------

FiniteMetricSpace GenerateSpace(const Options& opt, Rng& rng) {
  const std::string kind = opt.kind.empty() ? "euclidean" : opt.kind;
  if (kind == "euclidean") return RandomEuclideanSpace(opt.n, opt.dim, rng);
  if (kind == "table") return RandomTableSpace(opt.n, rng);
  if (kind == "grid") return UniformGrid(opt.n);
  throw InputError("--kind for spaces must be euclidean, table or grid");
}

int GenSpace(Context& ctx) {
  Rng rng(ctx.opt.seed);
  ctx.config["seed"] = ctx.opt.seed;
  ctx.config["kind"] = ctx.opt.kind.empty() ? "euclidean" : ctx.opt.kind;
  ctx.config["n"] = ctx.opt.n;
  ctx.config["dim"] = ctx.opt.dim;
  if (ctx.opt.n > ctx.limits.max_space_points) {
    throw ResourceError("n exceeds the space cap");
  }
  ctx.result = SpaceToJson(GenerateSpace(ctx.opt, rng));
  return kExitOk;
}

int GenMap(Context& ctx) {
  Rng rng(ctx.opt.seed);
  ctx.config["seed"] = ctx.opt.seed;
  ctx.config["scope"] = ctx.opt.scope;
  FiniteMetricSpace space = [&] {
    if (ctx.opt.space_file) {
      ctx.config["space"] = *ctx.opt.space_file;
      return CheckSpaceCap(SpaceFromJson(ReadDocument(*ctx.opt.space_file),
                                         BaseDir(*ctx.opt.space_file)),
                           ctx.limits);
    }
    ctx.config["n"] = ctx.opt.n;
    ctx.config["dim"] = ctx.opt.dim;
    ctx.config["kind"] = ctx.opt.kind.empty() ? "euclidean" : ctx.opt.kind;
    if (ctx.opt.n > ctx.limits.max_space_points) {
      throw ResourceError("n exceeds the space cap");
    }
    return GenerateSpace(ctx.opt, rng);
  }();
  if (ctx.opt.scope == "random") {
    ctx.config["max_image"] = ctx.opt.max_image;
    ctx.result = MapToJson(RandomMap(space, ctx.opt.max_image, rng));
    return kExitOk;
  }
  ContractionSpec spec;
  spec.beta = ctx.opt.beta;
  spec.set_valued = ctx.opt.set_valued;
  spec.sweeps = ctx.opt.sweeps;
  ctx.config["beta"] = spec.beta;
  ctx.config["set_valued"] = spec.set_valued;
  ctx.config["sweeps"] = spec.sweeps;
  if (ctx.opt.scope == "global") {
    spec.scope = ContractionScope::kGlobal;
  } else if (ctx.opt.scope == "local") {
    spec.scope = ContractionScope::kLocal;
    spec.r = RequireScale(ctx.opt.r, "--r");
    ctx.config["r"] = spec.r;
  } else if (ctx.opt.scope == "pointwise") {
    spec.scope = ContractionScope::kPointwise;
    spec.neighborhood =
        ParseNeighborhood(ctx.opt.neighborhood.value_or("knn:1"));
    ctx.config["neighborhood"] = spec.neighborhood.Describe();
  } else {
    throw InputError("--scope must be random, global, local or pointwise");
  }
  ctx.result = MapToJson(GenerateContraction(space, spec, rng));
  return kExitOk;
}

int GenGame(Context& ctx) {
  const std::string kind = ctx.opt.kind.empty() ? "table" : ctx.opt.kind;
  ctx.config["kind"] = kind;
  if (kind == "quadratic") {
    ctx.config["a"] = ctx.opt.a;
    ctx.config["b"] = ctx.opt.b;
    ctx.config["grid"] = ctx.opt.grid;
    ctx.result = GameToJson(QuadraticGame(ctx.opt.a, ctx.opt.b, ctx.opt.grid));
    return kExitOk;
  }
  if (kind == "discoordination") {
    ctx.result = GameToJson(DiscoordinationGame());
    return kExitOk;
  }
  if (kind != "table") {
    throw InputError("--kind for games must be table, quadratic or "
                     "discoordination");
  }
  std::vector<std::size_t> sizes;
  std::size_t total = 1;
  for (const auto& part : SplitCommas(ctx.opt.sizes)) {
    const double k = ParseReal(part, "--sizes");
    if (!(k >= 1.0) || k != static_cast<double>(static_cast<std::size_t>(k))) {
      throw InputError("--sizes needs positive integers");
    }
    sizes.push_back(static_cast<std::size_t>(k));
    total *= sizes.back();
    if (total > ctx.limits.max_product_points) {
      throw ResourceError("profile space exceeds the cap");
    }
  }
  if (sizes.empty()) throw InputError("--sizes is empty");
  Rng rng(ctx.opt.seed);
  ctx.config["seed"] = ctx.opt.seed;
  ctx.config["sizes"] = sizes;
  ctx.config["levels"] = ctx.opt.levels;
  ctx.result = GameToJson(RandomTableGame(sizes, ctx.opt.levels, rng));
  return kExitOk;
}

// ---- output --------------------------------------------------------------

void WriteText(const Json& report, int code, std::ostream& out) {
  out << report["command"].get<std::string>() << ": exit " << code << "\n";
  std::function<void(const Json&, const std::string&, int)> walk =
      [&](const Json& node, const std::string& prefix, int depth) {
        for (const auto& [key, value] : node.items()) {
          const std::string name = prefix.empty() ? key : prefix + "." + key;
          if (value.is_object()) {
            if (depth < 1) walk(value, name, depth + 1);
          } else if (value.is_array()) {
            if (value.size() <= 8 && !value.empty() &&
                !value.front().is_structured()) {
              out << "  " << name << ": " << value.dump() << "\n";
            } else {
              out << "  " << name << ": [" << value.size() << " entries]\n";
            }
          } else {
            out << "  " << name << ": " << value.dump() << "\n";
          }
        }
      };
  walk(report["result"], "", 0);
}

void AddCommon(CLI::App* cmd, Options& opt, bool with_input = true) {
  if (with_input) {
    cmd->add_option("--in", opt.in, "Input document, '-' for stdin");
  }
  cmd->add_option("--format", opt.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app("metricfix: fixed points of set-valued maps on finite "
               "metric spaces");
  app.require_subcommand(1);
  std::vector<std::pair<CLI::App*, std::pair<std::string, Handler>>> leaves;
  auto leaf = [&](CLI::App* group, const std::string& name,
                  const std::string& help, Handler handler) {
    CLI::App* cmd = group->add_subcommand(name, help);
    leaves.push_back(
        {cmd, {group->get_name() + " " + name, std::move(handler)}});
    return cmd;
  };

  CLI::App* space = app.add_subcommand("space", "Metric space checks");
  space->require_subcommand(1);
  CLI::App* metric = app.add_subcommand("metric", "Chain and path metrics");
  metric->require_subcommand(1);
  CLI::App* map = app.add_subcommand("map", "Set-valued maps");
  map->require_subcommand(1);
  CLI::App* game = app.add_subcommand("game", "Strategic-form games");
  game->require_subcommand(1);
  CLI::App* gen = app.add_subcommand("gen", "Seeded instance generators");
  gen->require_subcommand(1);

  CLI::App* cmd = leaf(space, "check", "Validate the metric axioms", SpaceCheck);
  AddCommon(cmd, opt);
  cmd->add_option("--tol", opt.tol, "Symmetry/triangle tolerance");
  cmd->add_flag("--convexity", opt.convexity, "Also test metric convexity");
  cmd->add_option("--max-witnesses", opt.max_witnesses);

  cmd = leaf(space, "product", "Product of factor spaces", SpaceProduct);
  AddCommon(cmd, opt);
  cmd->add_option("--combiner", opt.combiner, "max, sum or euclidean");

  cmd = leaf(metric, "chain", "Chain metric at scale r",
             [](Context& c) { return MetricDerived(c, DerivedKind::kChain); });
  AddCommon(cmd, opt);
  cmd->add_option("--r", opt.r, "Chain scale")->required();

  cmd = leaf(metric, "path", "Path metric at scale eps",
             [](Context& c) { return MetricDerived(c, DerivedKind::kPath); });
  AddCommon(cmd, opt);
  cmd->add_option("--eps", opt.eps, "Path scale")->required();

  cmd = leaf(metric, "geodesic", "Shortest eps-path", MetricGeodesic);
  AddCommon(cmd, opt);
  cmd->add_option("--eps", opt.eps)->required();
  cmd->add_option("--from", opt.from)->required();
  cmd->add_option("--to", opt.to)->required();

  cmd = leaf(map, "analyze", "All contraction certificates", MapAnalyze);
  AddCommon(cmd, opt);
  cmd->add_option("--metric", opt.metric, "base, chain:r or path:eps");
  cmd->add_option("--neighborhood", opt.neighborhood, "knn:k or radius:x");
  cmd->add_option("--local-r", opt.local_r, "Local certificate radius");
  cmd->add_option("--slope-h", opt.slope_h, "Discrete slope scale");

  cmd = leaf(map, "fix", "Exhaustive fixed points", MapFix);
  AddCommon(cmd, opt);

  cmd = leaf(map, "solve", "Greedy minimizing sequence", MapSolve);
  AddCommon(cmd, opt);
  cmd->add_option("--x0", opt.x0)->required();
  cmd->add_option("--max-iter", opt.max_iter);
  cmd->add_option("--metric", opt.metric, "base, chain:r or path:eps");

  cmd = leaf(map, "periodic", "Smallest period", MapPeriodic);
  AddCommon(cmd, opt);
  cmd->add_option("--max-period", opt.max_period)
      ->check(CLI::PositiveNumber);

  cmd = leaf(game, "br", "Best responses at a profile", GameBr);
  AddCommon(cmd, opt);
  cmd->add_option("--profile", opt.profile, "Comma-separated labels")
      ->required();
  cmd->add_option("--tie-tol", opt.tie_tol)->check(CLI::NonNegativeNumber);

  cmd = leaf(game, "nash", "Pure-strategy equilibria", GameNash);
  AddCommon(cmd, opt);
  cmd->add_option("--mode", opt.mode, "enumerate or dynamics")
      ->check(CLI::IsMember({"enumerate", "dynamics"}));
  cmd->add_option("--x0", opt.x0, "Start profile for dynamics");
  cmd->add_option("--max-iter", opt.max_iter);
  cmd->add_option("--metric", opt.metric, "base or path:eps");
  cmd->add_option("--tie-tol", opt.tie_tol)->check(CLI::NonNegativeNumber);

  cmd = leaf(game, "certify", "Contractive-game conditions", GameCertify);
  AddCommon(cmd, opt);
  cmd->add_option("--condition", opt.condition, "a, b or c")->required();
  cmd->add_option("--r", opt.r);
  cmd->add_option("--eps", opt.eps);
  cmd->add_option("--neighborhood", opt.neighborhood);
  cmd->add_option("--tie-tol", opt.tie_tol)->check(CLI::NonNegativeNumber);

  for (const char* what : {"space", "map", "game"}) {
    const std::string name = what;
    Handler handler = name == "space" ? Handler(GenSpace)
                      : name == "map" ? Handler(GenMap)
                                      : Handler(GenGame);
    cmd = leaf(gen, name, "Generate a " + name + " document", handler);
    AddCommon(cmd, opt, /*with_input=*/false);
    cmd->add_option("--seed", opt.seed);
    cmd->add_option("--kind", opt.kind);
    cmd->add_flag("--raw", opt.raw, "Emit the bare document");
    if (name != "game") {
      cmd->add_option("--n", opt.n)->check(CLI::PositiveNumber);
      cmd->add_option("--dim", opt.dim)->check(CLI::PositiveNumber);
    }
    if (name == "map") {
      cmd->add_option("--space", opt.space_file, "Space document to map on");
      cmd->add_option("--scope", opt.scope,
                      "random, global, local or pointwise");
      cmd->add_option("--beta", opt.beta);
      cmd->add_option("--r", opt.r);
      cmd->add_option("--neighborhood", opt.neighborhood);
      cmd->add_flag("--set-valued", opt.set_valued);
      cmd->add_option("--sweeps", opt.sweeps);
      cmd->add_option("--max-image", opt.max_image);
    }
    if (name == "game") {
      cmd->add_option("--sizes", opt.sizes, "Comma-separated strategy counts");
      cmd->add_option("--levels", opt.levels);
      cmd->add_option("--a", opt.a);
      cmd->add_option("--b", opt.b);
      cmd->add_option("--grid", opt.grid);
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "metricfix: " << e.what() << "\n";
    return kExitInputError;
  }

  for (auto& [cmd_app, entry] : leaves) {
    if (!cmd_app->parsed()) continue;
    Json config = Json::object();
    Json result = Json::object();
    int code = kExitInputError;
    const auto start = std::chrono::steady_clock::now();
    try {
      Context ctx{opt, Limits::FromEnvironment(), config, result};
      if (cmd_app->get_option_no_throw("--in") != nullptr) {
        config["in"] = opt.in;
      }
      config["max_space_points"] = ctx.limits.max_space_points;
      config["max_product_points"] = ctx.limits.max_product_points;
      code = entry.second(ctx);
    } catch (const InputError& e) {
      err << "metricfix: input error: " << e.what() << "\n";
      return kExitInputError;
    } catch (const ResourceError& e) {
      err << "metricfix: resource cap: " << e.what() << "\n";
      return kExitInputError;
    } catch (const EvaluationError& e) {
      err << "metricfix: evaluation error: " << e.what() << "\n";
      return kExitInputError;
    } catch (const Json::exception& e) {
      err << "metricfix: schema error: " << e.what() << "\n";
      return kExitInputError;
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    if (opt.raw) {
      out << result.dump(2) << "\n";
      return code;
    }
    Json report;
    report["command"] = entry.first;
    report["config"] = std::move(config);
    report["result"] = std::move(result);
    report["timing_ms"] = ms;
    if (opt.format == "text") {
      WriteText(report, code, out);
    } else {
      out << report.dump(2) << "\n";
    }
    return code;
  }
  err << "metricfix: no command given\n";
  return kExitInputError;
}

}  // namespace metricfix::cli
