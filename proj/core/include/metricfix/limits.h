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

#ifndef METRICFIX_LIMITS_H_
#define METRICFIX_LIMITS_H_

#include <cstddef>

namespace metricfix {

// Size caps that keep the quadratic and cubic scans at desk scale.
struct Limits {
  std::size_t max_space_points = 5000;
  std::size_t max_product_points = 100000;

  // Defaults, with both caps replaced by METRICFIX_CAP when it is set to a
  // positive integer. Throws InputError for an unparseable value.
  static Limits FromEnvironment();
};

}  // namespace metricfix

#endif  // METRICFIX_LIMITS_H_
