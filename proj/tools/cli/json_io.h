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

// JSON documents for spaces, maps and games, and encoders for results.

#ifndef METRICFIX_TOOLS_CLI_JSON_IO_H_
#define METRICFIX_TOOLS_CLI_JSON_IO_H_

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "metricfix/contraction.h"
#include "metricfix/derived_metric.h"
#include "metricfix/game.h"
#include "metricfix/metric_space.h"
#include "metricfix/set_valued_map.h"
#include "metricfix/solver.h"

namespace metricfix::cli {

using Json = nlohmann::ordered_json;

// Reads a file (or "-" for stdin) and parses it. Throws InputError.
Json ReadDocument(const std::string& path);

// A space document, or a string naming a file that holds one; relative
// paths resolve against base_dir.
FiniteMetricSpace SpaceFromJson(const Json& doc,
                                const std::filesystem::path& base_dir = {});
Json SpaceToJson(const FiniteMetricSpace& space);

SetValuedMap MapFromJson(const Json& doc,
                         const std::filesystem::path& base_dir = {});
Json MapToJson(const SetValuedMap& map);

Game GameFromJson(const Json& doc, const std::filesystem::path& base_dir = {});
Json GameToJson(const Game& game);

Json Labels(const FiniteMetricSpace& space, const PointSet& set);
Json Labels(const FiniteMetricSpace& space,
            const std::vector<PointIndex>& points);
Json MaybeNumber(const MaybeDistance& value);

Json DerivedToJson(const DerivedMetric& metric);
Json CertificateToJson(const ContractionCertificate& cert,
                       const FiniteMetricSpace& space);
Json TraceToJson(const SolveTrace& trace, const FiniteMetricSpace& space);
Json PathToJson(const DiscretePath& path, const FiniteMetricSpace& space);
Json CertifyReportToJson(const CertifyReport& report,
                         const FiniteMetricSpace& profiles);

}  // namespace metricfix::cli

#endif  // METRICFIX_TOOLS_CLI_JSON_IO_H_
