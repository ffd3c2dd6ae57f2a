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

#ifndef FRACALC_PARSER_HPP
#define FRACALC_PARSER_HPP

#include <string>
#include <string_view>

#include "symbolic.hpp"

namespace fracalc {

// Parses the expression language for generalized polynomials plus sin/cos:
//
//   expr    := ws ["+" | "-"] term (ws ("+" | "-") ws term)* ws
//   term    := coeff ws "*" ws atom | coeff | atom
//   coeff   := number | "pi" | "e"
//   atom    := "x" [ws "^" ws exponent] | trig
//   trig    := ("sin" | "cos") "(" ws "x" [ws ("+" | "-") ws number] ws ")"
//   exponent:= number | "pi" | "e" | "-" number
//   number  := digits ["." digits] [("e" | "E") ["+" | "-"] digits]
//
// The optional leading sign and the optional phase offset inside sin/cos
// exist so that format() output always reparses to the same expression.
// Multiplication is explicit: "3x" is rejected. Throws ParseError with a
// span on malformed input and DomainError when an exponent <= -1 is written.
GenExpr parse(std::string_view text);

// Canonical text: power terms in descending exponent order, then trig terms,
// numbers rendered with 17 significant digits, "+"/"-" separated. The empty
// expression formats as "0". parse(format(e)) == e term for term.
std::string format(const GenExpr& expr);

}  // namespace fracalc

#endif  // FRACALC_PARSER_HPP
