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

#include "symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "errors.hpp"
#include "special_functions.hpp"

namespace fracalc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;

std::string describe(const PowerTerm& t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g*x^%.17g", t.coeff, t.exponent);
  return buf;
}

std::string describe(const TrigTerm& t) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.17g*%s(x + %.17g)", t.coeff,
                t.base == TrigBase::sin ? "sin" : "cos", t.phase);
  return buf;
}

double rel_dev(double u, double v) {
  const double scale = std::max(std::abs(u), std::abs(v));
  return scale == 0.0 ? 0.0 : std::abs(u - v) / scale;
}

// Deviation of two phases under the mod-2pi topology, scaled like rel_dev.
double phase_dev(double p, double q) {
  double d = std::abs(p - q);
  d = std::min(d, kTwoPi - d);
  return d / std::max({std::abs(p), std::abs(q), 1.0});
}

}  // namespace

double reduce_two_pi(double phase) noexcept {
  double r = std::fmod(phase, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;  // r + 2pi can round up to 2pi for tiny negative r
  return r;
}

PowerTerm::PowerTerm(double c, double k) : coeff(c), exponent(k) {
  if (!std::isfinite(c))
    throw DomainError("power term: coefficient must be finite");
  if (!std::isfinite(k) || !(k > kExponentFloor + kMergeTolerance))
    throw DomainError("power term: exponent must exceed -1, got " +
                      std::to_string(k));
}

TrigTerm::TrigTerm(double c, TrigBase b, double p) : coeff(c), base(b) {
  if (!std::isfinite(c))
    throw DomainError("trig term: coefficient must be finite");
  if (!std::isfinite(p))
    throw DomainError("trig term: phase must be finite");
  phase = reduce_two_pi(p);
}

void GenExpr::canonicalize() {
  std::stable_sort(power_terms.begin(), power_terms.end(),
                   [](const PowerTerm& a, const PowerTerm& b) {
                     return a.exponent > b.exponent;
                   });
  std::vector<PowerTerm> merged;
  for (const PowerTerm& t : power_terms) {
    if (!merged.empty() &&
        std::abs(merged.back().exponent - t.exponent) <= kMergeTolerance) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const PowerTerm& t) { return t.coeff == 0.0; });
  power_terms = std::move(merged);

  std::stable_sort(trig_terms.begin(), trig_terms.end(),
                   [](const TrigTerm& a, const TrigTerm& b) {
                     if (a.base != b.base) return a.base < b.base;
                     return a.phase < b.phase;
                   });
  std::vector<TrigTerm> tmerged;
  for (const TrigTerm& t : trig_terms) {
    if (!tmerged.empty() && tmerged.back().base == t.base &&
        std::abs(tmerged.back().phase - t.phase) <= kMergeTolerance) {
      tmerged.back().coeff += t.coeff;
    } else {
      tmerged.push_back(t);
    }
  }
  std::erase_if(tmerged, [](const TrigTerm& t) { return t.coeff == 0.0; });
  trig_terms = std::move(tmerged);
}

double power_rule_coefficient(double p, double alpha) {
  if (!std::isfinite(p) || !(p > kExponentFloor))
    throw DomainError("power_rule_coefficient: exponent must exceed -1, got " +
                      std::to_string(p));
  if (!std::isfinite(alpha))
    throw DomainError("power_rule_coefficient: order must be finite");
  if (alpha == 0.0) return 1.0;  // identity, kept exact
  return genfactorial(p) * rgamma(p - alpha + 1.0);
}

std::optional<PowerTerm> apply(const PowerTerm& term, SignedOrder order) {
  const double c = power_rule_coefficient(term.exponent, order.alpha);
  if (c == 0.0) return std::nullopt;  // denominator gamma pole: term vanishes
  const double k = term.exponent - order.alpha;
  if (!(k > kExponentFloor + kMergeTolerance)) {
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "apply: result exponent %.17g is not representable (must "
                  "exceed -1)",
                  k);
    throw DomainError(buf);
  }
  return PowerTerm(term.coeff * c, k);
}

TrigTerm apply(const TrigTerm& term, SignedOrder order) {
  return TrigTerm(term.coeff, term.base, term.phase + order.alpha * kHalfPi);
}

GenExpr apply(const GenExpr& expr, SignedOrder order) {
  GenExpr out;
  for (const PowerTerm& t : expr.power_terms) {
    try {
      if (auto r = apply(t, order)) out.power_terms.push_back(*r);
    } catch (const DomainError& e) {
      throw DomainError(std::string(e.what()) + " [term " + describe(t) + "]");
    }
  }
  for (const TrigTerm& t : expr.trig_terms) out.trig_terms.push_back(apply(t, order));
  out.canonicalize();
  return out;
}

bool vanishes_at_origin(const GenExpr& expr) {
  for (const PowerTerm& t : expr.power_terms)
    if (!(t.exponent > 0.0)) return false;
  for (const TrigTerm& t : expr.trig_terms) {
    // value at 0 is coeff*sin(phase) or coeff*cos(phase)
    const double r = std::fmod(t.phase, kPi);  // phase >= 0, so r in [0, pi)
    const bool zero = t.base == TrigBase::sin
                          ? std::min(r, kPi - r) <= kMergeTolerance
                          : std::abs(r - kHalfPi) <= kMergeTolerance;
    if (!zero) return false;
  }
  return true;
}

double evaluate(const GenExpr& expr, double x) {
  if (!(x >= 0.0) || !std::isfinite(x))
    throw DomainError("evaluate: point must be non-negative and finite");
  double acc = 0.0;
  for (const PowerTerm& t : expr.power_terms) acc += t.coeff * std::pow(x, t.exponent);
  for (const TrigTerm& t : expr.trig_terms)
    acc += t.coeff * (t.base == TrigBase::sin ? std::sin(x + t.phase)
                                              : std::cos(x + t.phase));
  return acc;
}

double expr_deviation(const GenExpr& a, const GenExpr& b) {
  if (a.power_terms.size() != b.power_terms.size() ||
      a.trig_terms.size() != b.trig_terms.size())
    throw DomainError(
        "expr_deviation: expressions have different term structure (a gamma "
        "pole may have annihilated a term)");
  double dev = 0.0;
  for (std::size_t i = 0; i < a.power_terms.size(); ++i) {
    const PowerTerm& u = a.power_terms[i];
    const PowerTerm& v = b.power_terms[i];
    dev = std::max(dev, rel_dev(u.coeff, v.coeff));
    dev = std::max(dev, std::abs(u.exponent - v.exponent) /
                            std::max({std::abs(u.exponent),
                                      std::abs(v.exponent), 1.0}));
  }
  for (std::size_t i = 0; i < a.trig_terms.size(); ++i) {
    const TrigTerm& u = a.trig_terms[i];
    const TrigTerm& v = b.trig_terms[i];
    if (u.base != v.base)
      throw DomainError("expr_deviation: trig bases differ");
    dev = std::max(dev, rel_dev(u.coeff, v.coeff));
    dev = std::max(dev, phase_dev(u.phase, v.phase));
  }
  return dev;
}

SemigroupReport check_semigroup(const GenExpr& expr, double a, double b) {
  auto run = [&](const char* tag, auto&& compose) -> GenExpr {
    try {
      return compose();
    } catch (const Error& e) {
      throw DomainError(std::string("check_semigroup: composition ") + tag +
                        " failed: " + e.what());
    }
  };
  const GenExpr ab = run("(a then b)", [&] {
    return apply(apply(expr, SignedOrder{a}), SignedOrder{b});
  });
  const GenExpr ba = run("(b then a)", [&] {
    return apply(apply(expr, SignedOrder{b}), SignedOrder{a});
  });
  const GenExpr joint =
      run("(a+b)", [&] { return apply(expr, SignedOrder{a + b}); });

  double dev = std::max(expr_deviation(ab, ba), expr_deviation(ab, joint));
  dev = std::max(dev, expr_deviation(ba, joint));
  return SemigroupReport{dev};
}

}  // namespace fracalc
