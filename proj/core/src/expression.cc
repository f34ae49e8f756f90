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

#include "metricfix/expression.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "metricfix/errors.h"

namespace metricfix {

class Expression::Parser {
 public:
  Parser(std::string_view text, std::size_t num_variables,
         std::vector<Instr>& out)
      : text_(text), num_variables_(num_variables), out_(out) {}

  void Run() {
    ParseExpr();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw InputError("expression '" + std::string(text_) + "': " + what +
                     " at offset " + std::to_string(pos_));
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Accept(char c) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void Expect(char c) {
    if (!Accept(c)) Fail(std::string("expected '") + c + "'");
  }

  void Emit(Op op, double value = 0.0, std::size_t arg = 0) {
    out_.push_back({op, value, arg});
  }

  void ParseExpr() {
    ParseTerm();
    while (true) {
      if (Accept('+')) {
        ParseTerm();
        Emit(Op::kAdd);
      } else if (Accept('-')) {
        ParseTerm();
        Emit(Op::kSub);
      } else {
        return;
      }
    }
  }

  void ParseTerm() {
    ParseUnary();
    while (true) {
      if (Accept('*')) {
        ParseUnary();
        Emit(Op::kMul);
      } else if (Accept('/')) {
        ParseUnary();
        Emit(Op::kDiv);
      } else {
        return;
      }
    }
  }

  void ParseUnary() {
    if (Accept('-')) {
      ParseUnary();
      Emit(Op::kNeg);
      return;
    }
    ParsePower();
  }

  void ParsePower() {
    ParsePrimary();
    if (Accept('^')) {
      ParseUnary();
      Emit(Op::kPow);
    }
  }

  void ParsePrimary() {
    SkipSpace();
    if (pos_ >= text_.size()) Fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ParseExpr();
      Expect(')');
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      ParseNumber();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word == "abs" || word == "min" || word == "max") {
        ParseCall(word);
        return;
      }
      if (word.size() >= 2 && word[0] == 'x') {
        std::size_t k = 0;
        auto [ptr, ec] =
            std::from_chars(word.data() + 1, word.data() + word.size(), k);
        if (ec == std::errc() && ptr == word.data() + word.size() && k >= 1 &&
            k <= num_variables_) {
          Emit(Op::kVar, 0.0, k - 1);
          return;
        }
      }
      pos_ = start;
      Fail("unknown identifier '" + std::string(word) + "'");
    }
    Fail("unexpected '" + std::string(1, c) + "'");
  }

  void ParseNumber() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc()) Fail("malformed number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    Emit(Op::kConst, value);
  }

  void ParseCall(std::string_view name) {
    Expect('(');
    std::size_t arity = 1;
    ParseExpr();
    while (Accept(',')) {
      ParseExpr();
      ++arity;
    }
    Expect(')');
    if (name == "abs") {
      if (arity != 1) Fail("abs takes one argument");
      Emit(Op::kAbs);
    } else {
      if (arity < 2) Fail(std::string(name) + " takes at least two arguments");
      Emit(name == "min" ? Op::kMin : Op::kMax, 0.0, arity);
    }
  }

  std::string_view text_;
  std::size_t num_variables_;
  std::vector<Instr>& out_;
  std::size_t pos_ = 0;
};

Expression Expression::Parse(std::string_view text,
                             std::size_t num_variables) {
  Expression e;
  e.text_ = std::string(text);
  e.num_variables_ = num_variables;
  Parser(e.text_, num_variables, e.program_).Run();
  return e;
}

double Expression::Evaluate(std::span<const double> variables) const {
  if (variables.size() != num_variables_) {
    throw InputError("expression expects " + std::to_string(num_variables_) +
                     " variables, got " + std::to_string(variables.size()));
  }
  std::vector<double> stack;
  stack.reserve(program_.size());
  auto pop = [&stack] {
    const double v = stack.back();
    stack.pop_back();
    return v;
  };
  for (const Instr& in : program_) {
    switch (in.op) {
      case Op::kConst:
        stack.push_back(in.value);
        break;
      case Op::kVar:
        stack.push_back(variables[in.arg]);
        break;
      case Op::kNeg:
        stack.back() = -stack.back();
        break;
      case Op::kAbs:
        stack.back() = std::abs(stack.back());
        break;
      case Op::kAdd: {
        const double b = pop();
        stack.back() += b;
        break;
      }
      case Op::kSub: {
        const double b = pop();
        stack.back() -= b;
        break;
      }
      case Op::kMul: {
        const double b = pop();
        stack.back() *= b;
        break;
      }
      case Op::kDiv: {
        const double b = pop();
        if (b == 0.0) {
          throw EvaluationError("division by zero in '" + text_ + "'");
        }
        stack.back() /= b;
        break;
      }
      case Op::kPow: {
        const double b = pop();
        stack.back() = std::pow(stack.back(), b);
        break;
      }
      case Op::kMin:
      case Op::kMax: {
        double acc = pop();
        for (std::size_t i = 1; i < in.arg; ++i) {
          const double v = pop();
          acc = in.op == Op::kMin ? std::min(acc, v) : std::max(acc, v);
        }
        stack.push_back(acc);
        break;
      }
    }
  }
  const double result = stack.back();
  if (!std::isfinite(result)) {
    throw EvaluationError("'" + text_ + "' evaluates to a non-finite value");
  }
  return result;
}

}  // namespace metricfix
