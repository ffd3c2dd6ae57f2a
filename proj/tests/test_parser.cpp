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

#include <numbers>
#include <random>
#include <string>

#include <doctest.h>

#include "errors.hpp"
#include "parser.hpp"
#include "symbolic.hpp"

using namespace fracalc;

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
}

GenExpr random_expr(std::mt19937_64& rng) {
  GenExpr e;
  const int np = static_cast<int>(rng() % 5);
  const int nt = static_cast<int>(rng() % 3);
  for (int i = 0; i < np; ++i) {
    const double mag = uniform(rng, 1e-3, 4.0);
    e.power_terms.emplace_back((rng() & 1) ? mag : -mag,
                               uniform(rng, -0.9, 6.0));
  }
  for (int i = 0; i < nt; ++i) {
    const double mag = uniform(rng, 1e-3, 4.0);
    e.trig_terms.emplace_back((rng() & 1) ? mag : -mag,
                              (rng() & 1) ? TrigBase::sin : TrigBase::cos,
                              uniform(rng, 0.0, 6.28));
  }
  e.canonicalize();
  return e;
}

}  // namespace

TEST_CASE("parse: simple inputs") {
  SUBCASE("bare fractional power") {
    const GenExpr e = parse("x^0.5");
    REQUIRE(e.power_terms.size() == 1);
    CHECK(e.power_terms[0].coeff == 1.0);
    CHECK(e.power_terms[0].exponent == 0.5);
    CHECK(e.trig_terms.empty());
  }
  SUBCASE("mixed polynomial and trig") {
    const GenExpr e = parse("3*x^2.5 - 2*x + sin(x)");
    REQUIRE(e.power_terms.size() == 2);
    CHECK(e.power_terms[0].coeff == 3.0);
    CHECK(e.power_terms[0].exponent == 2.5);
    CHECK(e.power_terms[1].coeff == -2.0);
    CHECK(e.power_terms[1].exponent == 1.0);
    REQUIRE(e.trig_terms.size() == 1);
    CHECK(e.trig_terms[0].base == TrigBase::sin);
    CHECK(e.trig_terms[0].phase == 0.0);
  }
  SUBCASE("named constants as exponents and coefficients") {
    CHECK(parse("x^pi").power_terms[0].exponent == std::numbers::pi);
    CHECK(parse("x^e").power_terms[0].exponent == std::numbers::e);
    CHECK(parse("pi*x").power_terms[0].coeff == std::numbers::pi);
    CHECK(parse("pi").power_terms[0].coeff == std::numbers::pi);
    CHECK(parse("pi").power_terms[0].exponent == 0.0);
  }
  SUBCASE("numbers with exponent parts") {
    CHECK(parse("2e3*x").power_terms[0].coeff == 2000.0);
    CHECK(parse("1.5E-2*x").power_terms[0].coeff == 0.015);
  }
  SUBCASE("negative exponents down to (not including) -1") {
    CHECK(parse("x^-0.5").power_terms[0].exponent == -0.5);
    CHECK_THROWS_AS(parse("x^-1"), DomainError);
    CHECK_THROWS_AS(parse("x^-1.5"), DomainError);
  }
  SUBCASE("leading sign and phase offsets round-trip support") {
    CHECK(parse("-2*x^1").power_terms[0].coeff == -2.0);
    const GenExpr e = parse("sin(x + 0.5)");
    REQUIRE(e.trig_terms.size() == 1);
    CHECK(e.trig_terms[0].phase == 0.5);
  }
  SUBCASE("zero literal gives the empty expression") {
    CHECK(parse("0").empty());
  }
}

TEST_CASE("parse: malformed inputs carry spans") {
  SUBCASE("dangling caret") {
    try {
      parse("x^");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.span().begin == 2);
      bool mentions_number = false;
      for (const std::string& s : e.expected())
        if (s == "number") mentions_number = true;
      CHECK(mentions_number);
    }
  }
  SUBCASE("implicit multiplication is rejected") {
    CHECK_THROWS_AS(parse("3x"), ParseError);
  }
  SUBCASE("assorted rejects") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("x +"), ParseError);
    CHECK_THROWS_AS(parse("sin(y)"), ParseError);
    CHECK_THROWS_AS(parse("sin(x"), ParseError);
    CHECK_THROWS_AS(parse("2*"), ParseError);
    CHECK_THROWS_AS(parse("x^e3"), ParseError);
    CHECK_THROWS_AS(parse("x**2"), ParseError);
    CHECK_THROWS_AS(parse("1."), ParseError);
  }
}

TEST_CASE("parse: error locality within invalid prefixes") {
  const std::string valid = "3.5*x^2.5 + 1*sin(x + 0.5)";
  REQUIRE_NOTHROW(parse(valid));
  for (std::size_t len = 1; len < valid.size(); ++len) {
    const std::string prefix = valid.substr(0, len);
    try {
      parse(prefix);
    } catch (const ParseError& e) {
      CHECK(e.span().begin <= len);
      CHECK(e.span().end <= len);
    }
  }
}

TEST_CASE("parse: whitespace between tokens is irrelevant") {
  const GenExpr tight = parse("3*x^2.5-2*x+sin(x + 1.25)");
  const GenExpr spaced = parse("  3 * x ^ 2.5 -\t2 * x + sin(x + 1.25) ");
  CHECK(tight == spaced);
}

TEST_CASE("format: canonical text") {
  CHECK(format(GenExpr{}) == "0");
  GenExpr half;
  half.power_terms.emplace_back(0.5, 1.5);
  half.canonicalize();
  CHECK(format(half) == "0.5*x^1.5");

  GenExpr mixed;
  mixed.power_terms.emplace_back(-2.0, 1.0);
  mixed.power_terms.emplace_back(3.0, 2.5);
  mixed.trig_terms.emplace_back(1.0, TrigBase::sin, 0.0);
  mixed.canonicalize();
  CHECK(format(mixed) == "3*x^2.5 - 2*x^1 + 1*sin(x)");

  GenExpr constant;
  constant.power_terms.emplace_back(-1.5, 0.0);
  constant.canonicalize();
  CHECK(format(constant) == "-1.5");
}

TEST_CASE("format: half-integral of sqrt(x) prints the sqrt(pi)/2 coefficient") {
  const GenExpr e = apply(parse("x^0.5"), SignedOrder::integral(0.5));
  const std::string text = format(e);
  // 17 significant digits of the computed Gamma(3/2)/Gamma(2) coefficient;
  // the true value is sqrt(pi)/2 = 0.88622692545275801...
  CHECK(text.substr(0, 15) == "0.8862269254527");
  CHECK(text.substr(text.size() - 4) == "*x^1");
  CHECK(parse(text) == e);
}

TEST_CASE("parse/format round trip is exact") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 1000; ++i) {
    const GenExpr e = random_expr(rng);
    const std::string text = format(e);
    CAPTURE(text);
    CHECK(parse(text) == e);
  }
}
