// Copyright 2026 fracalc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FRACALC_ERRORS_HPP
#define FRACALC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fracalc {

// Location of the gamma-function pole that triggered an error.
struct PoleReport {
  double location = 0.0;  // the offending non-positive integer argument
  std::string context;    // short tag of the operation that hit it
};

// Byte range into the original parser input.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string text;  // slice of the input covered by [begin, end)
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (non-positive order, exponent at or
// below -1, and so on).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Gamma function evaluated at a non-positive integer.
class PoleError : public Error {
 public:
  PoleError(const std::string& message, PoleReport report)
      : Error(message), report_(std::move(report)) {}

  const PoleReport& report() const noexcept { return report_; }

 private:
  PoleReport report_;
};

// Malformed expression text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceSpan span,
             std::vector<std::string> expected)
      : Error(message), span_(std::move(span)), expected_(std::move(expected)) {}

  const SourceSpan& span() const noexcept { return span_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  SourceSpan span_;
  std::vector<std::string> expected_;
};

}  // namespace fracalc

#endif  // FRACALC_ERRORS_HPP
