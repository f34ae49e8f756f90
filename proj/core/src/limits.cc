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

#include "metricfix/limits.h"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "metricfix/errors.h"

namespace metricfix {

Limits Limits::FromEnvironment() {
  Limits limits;
  const char* raw = std::getenv("METRICFIX_CAP");
  if (raw == nullptr || *raw == '\0') return limits;
  std::string_view text(raw);
  std::size_t cap = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || ptr != text.data() + text.size() || cap == 0) {
    throw InputError("METRICFIX_CAP must be a positive integer, got '" +
                     std::string(text) + "'");
  }
  limits.max_space_points = cap;
  limits.max_product_points = cap;
  return limits;
}

}  // namespace metricfix
