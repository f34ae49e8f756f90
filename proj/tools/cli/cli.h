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

#ifndef METRICFIX_TOOLS_CLI_CLI_H_
#define METRICFIX_TOOLS_CLI_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace metricfix::cli {

// Exit codes: 0 success / found / holds, 1 valid run with a negative answer,
// 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

// args excludes the program name. The report goes to `out`, diagnostics to
// `err`. Documents named "-" (the default) are read from stdin.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace metricfix::cli

#endif  // METRICFIX_TOOLS_CLI_CLI_H_
