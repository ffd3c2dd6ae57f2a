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

#include "parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "errors.hpp"

namespace fracalc {

namespace {

bool is_ident_char(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Parser {
 public:
  explicit Parser(std::string_view in) : in_(in) {}

  GenExpr run() {
    GenExpr out;
    skip_ws();
    bool negate = false;
    if (accept('+')) {
    } else if (accept('-')) {
      negate = true;
    }
    skip_ws();
    term(out, negate);
    for (;;) {
      skip_ws();
      if (accept('+')) {
        negate = false;
      } else if (accept('-')) {
        negate = true;
      } else {
        break;
      }
      skip_ws();
      term(out, negate);
    }
    skip_ws();
    if (!eof())
      fail(pos_, "unexpected trailing input", {"+", "-", "end of input"});
    out.canonicalize();
    return out;
  }

 private:
  std::string_view in_;
  std::size_t pos_ = 0;

  bool eof() const { return pos_ >= in_.size(); }
  char peek() const { return eof() ? '\0' : in_[pos_]; }

  void skip_ws() {
    while (!eof() && (in_[pos_] == ' ' || in_[pos_] == '\t' ||
                      in_[pos_] == '\n' || in_[pos_] == '\r'))
      ++pos_;
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) fail(pos_, std::string("expected '") + c + "'", {what});
  }

  [[noreturn]] void fail(std::size_t at, const std::string& message,
                         std::vector<std::string> expected) {
    SourceSpan span;
    span.begin = at;
    span.end = std::min(at + 1, in_.size());
    if (span.end < span.begin) span.end = span.begin;
    span.text = std::string(in_.substr(span.begin, span.end - span.begin));
    char head[64];
    std::snprintf(head, sizeof head, "parse error at offset %zu: ", at);
    throw ParseError(head + message, std::move(span), std::move(expected));
  }

  // Reads an identifier made of letters; empty result means none present.
  std::string_view ident() {
    const std::size_t start = pos_;
    while (!eof() && is_ident_char(in_[pos_])) ++pos_;
    return in_.substr(start, pos_ - start);
  }

  // number := digits ["." digits] [("e"|"E") ["+"|"-"] digits]
  // The exponent marker is consumed only when digits follow, so "2e" lexes
  // as the number 2 followed by whatever comes next.
  double number() {
    const std::size_t start = pos_;
    if (!is_digit(peek())) fail(pos_, "expected a number", {"number"});
    while (is_digit(peek())) ++pos_;
    if (peek() == '.') {
      ++pos_;
      if (!is_digit(peek())) fail(pos_, "expected digits after '.'", {"digit"});
      while (is_digit(peek())) ++pos_;
    }
    if (peek() == 'e' || peek() == 'E') {
      const std::size_t mark = pos_;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (is_digit(peek())) {
        while (is_digit(peek())) ++pos_;
      } else {
        pos_ = mark;  // bare marker: not part of the number
      }
    }
    double value = 0.0;
    const char* first = in_.data() + start;
    const char* last = in_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
      fail(start, "malformed number", {"number"});
    return value;
  }

  // exponent := number | "pi" | "e" | "-" number
  double exponent_value() {
    skip_ws();
    if (accept('-')) {
      skip_ws();
      return -number();
    }
    if (is_digit(peek())) return number();
    const std::size_t at = pos_;
    const std::string_view word = ident();
    if (word == "pi") return std::numbers::pi;
    if (word == "e") return std::numbers::e;
    fail(at, "expected an exponent", {"number", "pi", "e"});
  }

  void trig_atom(GenExpr& out, double coeff, TrigBase base) {
    expect('(', "(");
    skip_ws();
    const std::size_t arg_at = pos_;
    if (ident() != "x") fail(arg_at, "expected 'x'", {"x"});
    skip_ws();
    double phase = 0.0;
    if (peek() == '+' || peek() == '-') {
      const bool neg = peek() == '-';
      ++pos_;
      skip_ws();
      const double p = number();
      phase = neg ? -p : p;
      skip_ws();
    }
    expect(')', ")");
    out.trig_terms.emplace_back(coeff, base, phase);
  }

  // atom := "x" ["^" exponent] | trig
  void atom(GenExpr& out, double coeff) {
    const std::size_t at = pos_;
    const std::string_view word = ident();
    if (word == "x") {
      double exp = 1.0;
      skip_ws();
      if (accept('^')) exp = exponent_value();
      out.power_terms.emplace_back(coeff, exp);  // DomainError for exp <= -1
      return;
    }
    if (word == "sin" || word == "cos") {
      trig_atom(out, coeff, word == "sin" ? TrigBase::sin : TrigBase::cos);
      return;
    }
    fail(at, "expected a term", {"x", "sin(x)", "cos(x)", "number"});
  }

  // term := coeff "*" atom | coeff | atom
  void term(GenExpr& out, bool negate) {
    const double sign = negate ? -1.0 : 1.0;
    double coeff = 1.0;
    bool have_coeff = false;
    if (is_digit(peek())) {
      coeff = number();
      have_coeff = true;
    } else {
      const std::size_t at = pos_;
      const std::string_view word = ident();
      if (word == "pi") {
        coeff = std::numbers::pi;
        have_coeff = true;
      } else if (word == "e") {
        coeff = std::numbers::e;
        have_coeff = true;
      } else if (!word.empty()) {
        pos_ = at;  // an atom keyword; reparse below
      } else {
        fail(at, "expected a term",
             {"number", "pi", "e", "x", "sin(x)", "cos(x)"});
      }
    }
    if (have_coeff) {
      skip_ws();
      if (accept('*')) {
        skip_ws();
        atom(out, sign * coeff);
        return;
      }
      // bare number: constant term
      out.power_terms.emplace_back(sign * coeff, 0.0);
      return;
    }
    atom(out, sign);
  }
};

void render_number(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

GenExpr parse(std::string_view text) { return Parser(text).run(); }

std::string format(const GenExpr& expr) {
  if (expr.empty()) return "0";
  std::string out;
  bool first = true;
  auto emit = [&](double coeff, const std::string& body) {
    const bool negative = std::signbit(coeff);
    if (first) {
      if (negative) out += '-';
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    render_number(out, std::abs(coeff));
    if (!body.empty()) {
      out += '*';
      out += body;
    }
  };
  for (const PowerTerm& t : expr.power_terms) {
    std::string body;
    if (t.exponent != 0.0) {
      body = "x^";
      render_number(body, t.exponent);
    }
    emit(t.coeff, body);
  }
  for (const TrigTerm& t : expr.trig_terms) {
    std::string body = t.base == TrigBase::sin ? "sin(x" : "cos(x";
    if (t.phase != 0.0) {
      body += " + ";
      render_number(body, t.phase);
    }
    body += ')';
    emit(t.coeff, body);
  }
  return out;
}

}  // namespace fracalc
