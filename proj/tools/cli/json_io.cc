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

#include "json_io.h"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <utility>

#include "metricfix/errors.h"

namespace metricfix::cli {
namespace {

const Json& Require(const Json& doc, const char* key, const char* what) {
  if (!doc.is_object()) {
    throw InputError(std::string(what) + " must be a JSON object");
  }
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw InputError(std::string(what) + " is missing \"" + key + "\"");
  }
  return *it;
}

double Number(const Json& value, const std::string& where) {
  if (!value.is_number()) throw InputError(where + ": expected a number");
  return value.get<double>();
}

std::string String(const Json& value, const std::string& where) {
  if (!value.is_string()) throw InputError(where + ": expected a string");
  return value.get<std::string>();
}

std::vector<double> NumberRow(const Json& row, const std::string& where) {
  if (!row.is_array()) throw InputError(where + ": expected an array");
  std::vector<double> out;
  out.reserve(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    out.push_back(Number(row[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::filesystem::path Resolve(const std::string& path,
                              const std::filesystem::path& base_dir) {
  std::filesystem::path p(path);
  if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
  return p;
}

PointIndex LookUp(const FiniteMetricSpace& space, const Json& label,
                  const std::string& where) {
  const std::string text = String(label, where);
  const auto index = space.Find(text);
  if (!index) throw InputError(where + ": unknown point '" + text + "'");
  return *index;
}

// Flattens player i's nested payoff array (depth = number of players) in
// profile order, last player fastest.
void Flatten(const Json& node, const ProductShape& shape, std::size_t depth,
             const std::string& where, std::vector<double>& out) {
  if (depth == shape.num_factors()) {
    out.push_back(Number(node, where));
    return;
  }
  if (!node.is_array() || node.size() != shape.size(depth)) {
    throw InputError(where + ": expected an array of " +
                     std::to_string(shape.size(depth)) + " entries");
  }
  for (std::size_t s = 0; s < node.size(); ++s) {
    Flatten(node[s], shape, depth + 1, where + "[" + std::to_string(s) + "]",
            out);
  }
}

Json Nest(const std::vector<double>& flat, const ProductShape& shape,
          std::size_t depth, std::size_t& cursor) {
  if (depth == shape.num_factors()) return flat[cursor++];
  Json node = Json::array();
  for (std::size_t s = 0; s < shape.size(depth); ++s) {
    node.push_back(Nest(flat, shape, depth + 1, cursor));
  }
  return node;
}

}  // namespace

Json ReadDocument(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

FiniteMetricSpace SpaceFromJson(const Json& doc,
                                const std::filesystem::path& base_dir) {
  if (doc.is_string()) {
    const auto path = Resolve(doc.get<std::string>(), base_dir);
    return SpaceFromJson(ReadDocument(path.string()), path.parent_path());
  }
  const Json& points = Require(doc, "points", "space document");
  if (!points.is_array() || points.empty()) {
    throw InputError("\"points\" must be a nonempty array of labels");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < points.size(); ++i) {
    labels.push_back(String(points[i], "points[" + std::to_string(i) + "]"));
  }
  const std::size_t n = labels.size();
  if (doc.contains("distances")) {
    const Json& rows = doc["distances"];
    if (!rows.is_array() || rows.size() != n) {
      throw InputError("\"distances\" must have one row per point");
    }
    std::vector<std::vector<double>> table;
    for (std::size_t i = 0; i < n; ++i) {
      table.push_back(
          NumberRow(rows[i], "distances[" + std::to_string(i) + "]"));
      if (table.back().size() != n) {
        throw InputError("distances row " + std::to_string(i) + " has " +
                         std::to_string(table.back().size()) +
                         " entries, expected " + std::to_string(n));
      }
    }
    return FiniteMetricSpace::FromRows(std::move(labels), table);
  }
  if (doc.contains("embedding")) {
    if (doc.contains("metric") &&
        String(doc["metric"], "metric") != "euclidean") {
      throw InputError("only the euclidean embedding metric is supported");
    }
    const Json& embedding = doc["embedding"];
    const double dim = Number(Require(embedding, "dim", "embedding"), "dim");
    const Json& coords = Require(embedding, "coords", "embedding");
    if (!coords.is_array() || coords.size() != n) {
      throw InputError("\"coords\" must have one row per point");
    }
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      rows.push_back(NumberRow(coords[i], "coords[" + std::to_string(i) + "]"));
      if (static_cast<double>(rows.back().size()) != dim) {
        throw InputError("coords row " + std::to_string(i) +
                         " does not match dim");
      }
    }
    return FiniteMetricSpace::FromEmbedding(std::move(labels), rows);
  }
  throw InputError("space document needs \"distances\" or \"embedding\"");
}

Json SpaceToJson(const FiniteMetricSpace& space) {
  Json doc;
  doc["points"] = space.labels();
  Json rows = Json::array();
  for (PointIndex i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (PointIndex j = 0; j < space.size(); ++j) {
      row.push_back(space.distance(i, j));
    }
    rows.push_back(std::move(row));
  }
  doc["distances"] = std::move(rows);
  return doc;
}

SetValuedMap MapFromJson(const Json& doc,
                         const std::filesystem::path& base_dir) {
  if (doc.is_string()) {
    const auto path = Resolve(doc.get<std::string>(), base_dir);
    return MapFromJson(ReadDocument(path.string()), path.parent_path());
  }
  FiniteMetricSpace space =
      SpaceFromJson(Require(doc, "space", "map document"), base_dir);
  const Json& images = Require(doc, "images", "map document");
  if (!images.is_object()) throw InputError("\"images\" must be an object");
  std::vector<std::optional<PointSet>> slots(space.size());
  for (const auto& [key, value] : images.items()) {
    const auto x = space.Find(key);
    if (!x) throw InputError("images: unknown point '" + key + "'");
    if (!value.is_array() || value.empty()) {
      throw InputError("image of '" + key + "' must be a nonempty array");
    }
    std::vector<PointIndex> members;
    for (const Json& label : value) {
      members.push_back(LookUp(space, label, "image of '" + key + "'"));
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    slots[*x] = PointSet(std::move(members), space.size());
  }
  std::vector<PointSet> sets;
  for (PointIndex x = 0; x < space.size(); ++x) {
    if (!slots[x]) {
      throw InputError("images: no image for '" + space.label(x) + "'");
    }
    sets.push_back(std::move(*slots[x]));
  }
  return SetValuedMap(std::move(space), std::move(sets));
}

Json MapToJson(const SetValuedMap& map) {
  Json doc;
  doc["space"] = SpaceToJson(map.space());
  Json images = Json::object();
  for (PointIndex x = 0; x < map.size(); ++x) {
    images[map.space().label(x)] = Labels(map.space(), map.image(x));
  }
  doc["images"] = std::move(images);
  return doc;
}

Game GameFromJson(const Json& doc, const std::filesystem::path& base_dir) {
  if (doc.is_string()) {
    const auto path = Resolve(doc.get<std::string>(), base_dir);
    return GameFromJson(ReadDocument(path.string()), path.parent_path());
  }
  const Json& strategies = Require(doc, "strategies", "game document");
  if (!strategies.is_array() || strategies.empty()) {
    throw InputError("\"strategies\" must be a nonempty array");
  }
  std::vector<FiniteMetricSpace> spaces;
  for (const Json& s : strategies) spaces.push_back(SpaceFromJson(s, base_dir));
  if (doc.contains("players") &&
      Number(doc["players"], "players") != static_cast<double>(spaces.size())) {
    throw InputError("\"players\" does not match the number of strategy spaces");
  }
  Combiner combiner = Combiner::kMax;
  if (doc.contains("combiner")) {
    const std::string name = String(doc["combiner"], "combiner");
    const auto parsed = ParseCombiner(name);
    if (!parsed) throw InputError("unknown combiner '" + name + "'");
    combiner = *parsed;
  }
  const Json& payoffs = Require(doc, "payoffs", "game document");
  const std::string mode = String(Require(payoffs, "mode", "payoffs"), "mode");
  if (mode == "table") {
    std::vector<std::size_t> sizes;
    for (const auto& s : spaces) sizes.push_back(s.size());
    const ProductShape shape(sizes);
    const Json& data = Require(payoffs, "data", "payoffs");
    if (!data.is_array() || data.size() != spaces.size()) {
      throw InputError("payoff data needs one array per player");
    }
    PayoffTable table;
    for (std::size_t i = 0; i < data.size(); ++i) {
      std::vector<double> flat;
      Flatten(data[i], shape, 0, "data[" + std::to_string(i) + "]", flat);
      table.values.push_back(std::move(flat));
    }
    return Game(std::move(spaces), std::move(table), combiner);
  }
  if (mode == "expression") {
    const Json& texts = Require(payoffs, "formulas", "payoffs");
    if (!texts.is_array()) throw InputError("\"formulas\" must be an array");
    PayoffFormulas formulas;
    for (std::size_t i = 0; i < texts.size(); ++i) {
      formulas.formulas.push_back(Expression::Parse(
          String(texts[i], "formulas[" + std::to_string(i) + "]"),
          spaces.size()));
    }
    return Game(std::move(spaces), std::move(formulas), combiner);
  }
  throw InputError("payoff mode must be \"table\" or \"expression\"");
}

Json GameToJson(const Game& game) {
  Json doc;
  doc["players"] = game.num_players();
  Json strategies = Json::array();
  for (const auto& s : game.strategy_spaces()) {
    strategies.push_back(SpaceToJson(s));
  }
  doc["strategies"] = std::move(strategies);
  Json payoffs;
  if (const auto* table = std::get_if<PayoffTable>(&game.payoffs())) {
    payoffs["mode"] = "table";
    Json data = Json::array();
    for (const auto& flat : table->values) {
      std::size_t cursor = 0;
      data.push_back(Nest(flat, game.shape(), 0, cursor));
    }
    payoffs["data"] = std::move(data);
  } else {
    payoffs["mode"] = "expression";
    Json texts = Json::array();
    for (const auto& f : std::get<PayoffFormulas>(game.payoffs()).formulas) {
      texts.push_back(f.text());
    }
    payoffs["formulas"] = std::move(texts);
  }
  doc["payoffs"] = std::move(payoffs);
  doc["combiner"] = std::string(CombinerName(game.combiner()));
  return doc;
}

Json Labels(const FiniteMetricSpace& space, const PointSet& set) {
  Json out = Json::array();
  for (PointIndex p : set) out.push_back(space.label(p));
  return out;
}

Json Labels(const FiniteMetricSpace& space,
            const std::vector<PointIndex>& points) {
  Json out = Json::array();
  for (PointIndex p : points) out.push_back(space.label(p));
  return out;
}

Json MaybeNumber(const MaybeDistance& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json DerivedToJson(const DerivedMetric& metric) {
  Json doc;
  doc["kind"] = metric.kind() == DerivedKind::kChain ? "chain" : "path";
  doc["scale"] = metric.scale();
  doc["points"] = metric.base().labels();
  Json rows = Json::array();
  for (PointIndex i = 0; i < metric.size(); ++i) {
    Json row = Json::array();
    for (PointIndex j = 0; j < metric.size(); ++j) {
      row.push_back(MaybeNumber(metric.distance(i, j)));
    }
    rows.push_back(std::move(row));
  }
  doc["distances"] = std::move(rows);
  Json classes = Json::array();
  for (const auto& c : metric.components().classes) {
    classes.push_back(Labels(metric.base(), c));
  }
  doc["components"] = std::move(classes);
  return doc;
}

Json CertificateToJson(const ContractionCertificate& cert,
                       const FiniteMetricSpace& space) {
  Json doc;
  doc["kind"] = std::string(CertificateKindName(cert.kind));
  doc["modulus"] = cert.modulus;
  doc["holds"] = cert.holds;
  doc["boundary"] = cert.boundary;
  if (cert.kind == CertificateKind::kPointwise) doc["uniform"] = cert.uniform;
  if (cert.radius) doc["radius"] = *cert.radius;
  if (cert.worst_pair) {
    doc["worst_pair"] = {{"x", space.label(cert.worst_pair->x)},
                         {"y", space.label(cert.worst_pair->y)},
                         {"ratio", cert.worst_pair->ratio}};
  } else {
    doc["worst_pair"] = nullptr;
  }
  if (!cert.point_moduli.empty()) {
    Json moduli = Json::object();
    for (PointIndex x = 0; x < cert.point_moduli.size(); ++x) {
      moduli[space.label(x)] = cert.point_moduli[x];
    }
    doc["point_moduli"] = std::move(moduli);
  }
  Json unevaluable = Json::array();
  for (const auto& [x, y] : cert.unevaluable_pairs) {
    unevaluable.push_back({space.label(x), space.label(y)});
  }
  doc["unevaluable_pairs"] = std::move(unevaluable);
  if (cert.kind == CertificateKind::kPointwise) {
    doc["isolated_points"] = Labels(space, cert.isolated_points);
  }
  return doc;
}

Json TraceToJson(const SolveTrace& trace, const FiniteMetricSpace& space) {
  Json doc;
  doc["outcome"] = std::string(SolveOutcomeName(trace.outcome));
  doc["steps"] = trace.steps();
  doc["iterates"] = Labels(space, trace.iterates);
  Json gaps = Json::array();
  for (const auto& g : trace.gaps) gaps.push_back(MaybeNumber(g));
  doc["gaps"] = std::move(gaps);
  doc["fixed_point"] = trace.fixed_point
                           ? Json(space.label(*trace.fixed_point))
                           : Json(nullptr);
  doc["cycle_start"] =
      trace.cycle_start ? Json(*trace.cycle_start) : Json(nullptr);
  return doc;
}

Json PathToJson(const DiscretePath& path, const FiniteMetricSpace& space) {
  Json doc;
  doc["waypoints"] = Labels(space, path.waypoints());
  doc["params"] = path.params();
  doc["length"] = PathLength(space, path);
  return doc;
}

Json CertifyReportToJson(const CertifyReport& report,
                         const FiniteMetricSpace& profiles) {
  Json doc;
  doc["condition"] = std::string(GameConditionName(report.condition));
  doc["satisfied_by_finiteness"] = report.satisfied_by_finiteness;
  Json checks = Json::array();
  for (const auto& c : report.space_checks) {
    checks.push_back({{"name", c.name},
                      {"scale", c.scale},
                      {"holds", c.holds},
                      {"components", c.components}});
  }
  doc["space_checks"] = std::move(checks);
  if (report.neighborhood) {
    doc["neighborhood"] = report.neighborhood->Describe();
  }
  doc["br_certificate"] = CertificateToJson(report.br_certificate, profiles);
  if (report.shrinking) {
    doc["shrinking"] = CertificateToJson(*report.shrinking, profiles);
  }
  doc["verdict"] = report.verdict ? "holds" : "fails";
  doc["failures"] = report.failures;
  return doc;
}

}  // namespace metricfix::cli
