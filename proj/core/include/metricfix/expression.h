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

#ifndef METRICFIX_EXPRESSION_H_
#define METRICFIX_EXPRESSION_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace metricfix {

// Arithmetic over variables x1..xn.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := number | xK | func '(' expr (',' expr)* ')' | '(' expr ')'
//   func    := abs | min | max
//
// so ^ binds tighter than unary minus: -x1^2 is -(x1^2), and 2^-1 is 0.5.
class Expression {
 public:
  // Throws InputError on a syntax error or a variable outside x1..xK with
  // K = num_variables.
  static Expression Parse(std::string_view text, std::size_t num_variables);

  // Throws EvaluationError on division by zero or a non-finite result.
  double Evaluate(std::span<const double> variables) const;

  const std::string& text() const { return text_; }

 private:
  enum class Op { kConst, kVar, kNeg, kAdd, kSub, kMul, kDiv, kPow, kAbs,
                  kMin, kMax };
  struct Instr {
    Op op;
    double value = 0.0;    // kConst
    std::size_t arg = 0;   // kVar: variable index; kMin/kMax: arity
  };
  class Parser;

  std::string text_;
  std::size_t num_variables_ = 0;
  std::vector<Instr> program_;  // postfix
};

}  // namespace metricfix

#endif  // METRICFIX_EXPRESSION_H_
