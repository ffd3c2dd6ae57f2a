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

#include "selfcheck.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "numeric.hpp"
#include "parser.hpp"
#include "special_functions.hpp"
#include "symbolic.hpp"

namespace fracalc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

// Uniform doubles straight from the engine bits; keeps the report
// reproducible independent of the standard library's distribution choices.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(
                                               hi - lo + 1));
  }

  bool chance(double p) { return uniform(0.0, 1.0) < p; }

 private:
  std::mt19937_64 engine_;
};

SuiteResult gamma_recurrence_suite(Rng& rng) {
  SuiteResult r{"gamma-recurrence", 1000, 0};
  for (int i = 0; i < r.total; ++i) {
    const double x = rng.uniform(0.1, 20.0);
    const double lhs = gamma(x + 1.0);
    const double rhs = x * gamma(x);
    if (!(std::abs(lhs - rhs) / std::abs(lhs) <= 1e-12)) ++r.failed;
  }
  return r;
}

SuiteResult beta_identity_suite(Rng& rng) {
  SuiteResult r{"beta-identity", 500, 0};
  for (int i = 0; i < r.total; ++i) {
    const double p = rng.uniform(0.1, 10.0);
    const double q = rng.uniform(0.1, 10.0);
    const double direct = beta(p, q);
    const double via_log = std::exp(ln_gamma(p) + ln_gamma(q) - ln_gamma(p + q));
    if (!(std::abs(direct - via_log) / std::abs(via_log) <= 1e-12)) ++r.failed;
  }
  return r;
}

// Power-only expression with exponents in (lo, hi).
GenExpr random_power_expr(Rng& rng, double lo, double hi, int max_terms) {
  GenExpr e;
  const int n = rng.uniform_int(1, max_terms);
  for (int i = 0; i < n; ++i) {
    const double mag = rng.uniform(0.1, 3.0);
    const double coeff = rng.chance(0.5) ? mag : -mag;
    e.power_terms.emplace_back(coeff, rng.uniform(lo, hi));
  }
  e.canonicalize();
  return e;
}

SuiteResult semigroup_suite(Rng& rng) {
  SuiteResult r{"semigroup", 500, 0};
  for (int i = 0; i < r.total; ++i) {
    const GenExpr expr = random_power_expr(rng, 0.05, 5.0, 4);
    double a = 0.0, b = 0.0;
    // Resample (a, b) until every intermediate exponent stays clear of the
    // -1 floor; the 0.05 margin also keeps the gamma arguments
    // well-conditioned away from their poles.
    for (int attempt = 0; attempt < 200; ++attempt) {
      a = rng.uniform(-2.0, 2.0);
      b = rng.uniform(-2.0, 2.0);
      bool ok = true;
      for (const PowerTerm& t : expr.power_terms) {
        const double k = t.exponent;
        for (double shifted : {k - a, k - b, k - a - b})
          if (!(shifted > -1.0 + 0.05)) ok = false;
      }
      if (ok) break;
      a = b = 0.0;
    }
    const SemigroupReport report = check_semigroup(expr, a, b);
    if (!(report.max_rel_deviation <= 1e-12)) ++r.failed;
  }
  return r;
}

SuiteResult inverse_suite(Rng& rng) {
  SuiteResult r{"inverse", 200, 0};
  for (int i = 0; i < r.total; ++i) {
    GenExpr expr = random_power_expr(rng, 0.05, 5.0, 3);
    if (rng.chance(0.3)) {
      // sin terms with phase 0 or pi vanish at the origin and stay inside
      // the class where the inverse law holds
      expr.trig_terms.emplace_back(rng.uniform(0.2, 2.0), TrigBase::sin,
                                   rng.chance(0.5) ? 0.0 : kPi);
      expr.canonicalize();
    }
    const double s = rng.uniform(0.01, 2.0);
    const GenExpr back =
        apply(apply(expr, SignedOrder::integral(s)), SignedOrder::derivative(s));
    bool ok = vanishes_at_origin(expr);
    if (ok) {
      try {
        ok = expr_deviation(back, expr) <= 1e-12;
      } catch (const Error&) {
        ok = false;
      }
    }
    if (!ok) ++r.failed;
  }
  return r;
}

SuiteResult k_independence_suite() {
  SuiteResult r{"k-independence", 0, 0};
  const Evaluable functions[] = {
      {[](double y) { return y; }, "x"},
      {[](double y) { return y * y; }, "x^2"},
      {[](double y) { return std::pow(y, kPi); }, "x^pi"},
  };
  for (const Evaluable& f : functions) {
    for (double s : {0.5, 1.5, kE}) {
      ++r.total;
      const KIndependenceReport report = k_independence_check(f, s, 1.0, 64);
      if (!(report.rel_difference <= 1e-5)) ++r.failed;
    }
  }
  return r;
}

SuiteResult oracle_equivalence_suite() {
  SuiteResult r{"oracle-equivalence", 0, 0};
  const Evaluable functions[] = {
      {[](double y) { return y; }, "x"},
      {[](double y) { return y * y; }, "x^2"},
      {[](double y) { return std::sin(y); }, "sin"},
  };
  for (const Evaluable& f : functions) {
    for (int m : {2, 3}) {
      ++r.total;
      const double nested = nested_integral_oracle(f, m, 1.0, 48);
      const double direct = rl_integral(f, static_cast<double>(m), 1.0, 64);
      if (!(std::abs(nested - direct) / std::abs(direct) <= 1e-8)) ++r.failed;
    }
  }
  return r;
}

// Any canonical expression the grammar can print: mixed power and trig
// terms, arbitrary phases.
GenExpr random_grammar_expr(Rng& rng) {
  GenExpr e;
  const int np = rng.uniform_int(0, 4);
  const int nt = rng.uniform_int(0, 2);
  for (int i = 0; i < np; ++i) {
    const double mag = rng.uniform(1e-3, 4.0);
    e.power_terms.emplace_back(rng.chance(0.5) ? mag : -mag,
                               rng.uniform(-0.9, 6.0));
  }
  for (int i = 0; i < nt; ++i) {
    const double mag = rng.uniform(1e-3, 4.0);
    e.trig_terms.emplace_back(rng.chance(0.5) ? mag : -mag,
                              rng.chance(0.5) ? TrigBase::sin : TrigBase::cos,
                              rng.uniform(0.0, 6.28));
  }
  e.canonicalize();
  return e;
}

SuiteResult parser_roundtrip_suite(Rng& rng) {
  SuiteResult r{"parser-roundtrip", 1000, 0};
  for (int i = 0; i < r.total; ++i) {
    const GenExpr expr = random_grammar_expr(rng);
    try {
      if (!(parse(format(expr)) == expr)) ++r.failed;
    } catch (const Error&) {
      ++r.failed;
    }
  }
  return r;
}

}  // namespace

bool SelfcheckReport::all_ok() const {
  for (const SuiteResult& s : suites)
    if (s.failed != 0) return false;
  return true;
}

SelfcheckReport run_selfcheck(std::uint64_t seed) {
  SelfcheckReport report;
  report.seed = seed;
  Rng rng(seed);
  report.suites.push_back(gamma_recurrence_suite(rng));
  report.suites.push_back(beta_identity_suite(rng));
  report.suites.push_back(semigroup_suite(rng));
  report.suites.push_back(inverse_suite(rng));
  report.suites.push_back(k_independence_suite());
  report.suites.push_back(oracle_equivalence_suite());
  report.suites.push_back(parser_roundtrip_suite(rng));
  return report;
}

std::string render(const SelfcheckReport& report) {
  std::string out = "selfcheck (seed " + std::to_string(report.seed) + ")\n";
  char line[96];
  for (const SuiteResult& s : report.suites) {
    std::snprintf(line, sizeof line, "  %-20s %4d/%-4d%s\n", s.name.c_str(),
                  s.total - s.failed, s.total,
                  s.failed == 0 ? "" : "  FAILED");
    out += line;
  }
  out += report.all_ok() ? "result: PASS\n" : "result: FAIL\n";
  return out;
}

}  // namespace fracalc
