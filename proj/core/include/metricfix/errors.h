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

#ifndef METRICFIX_ERRORS_H_
#define METRICFIX_ERRORS_H_

#include <stdexcept>
#include <string>

namespace metricfix {

// Malformed documents, invalid arguments, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size cap would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Payoff expression evaluation failed (division by zero, non-finite result).
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two points lie in different components at the requested scale.
class NoPathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace metricfix

#endif  // METRICFIX_ERRORS_H_
