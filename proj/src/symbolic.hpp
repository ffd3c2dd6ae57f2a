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

#ifndef FRACALC_SYMBOLIC_HPP
#define FRACALC_SYMBOLIC_HPP

#include <optional>
#include <vector>

namespace fracalc {

// Operator order with a sign convention that folds the twin integral and
// derivative families into one parameter: alpha > 0 differentiates, alpha < 0
// integrates, alpha == 0 is the identity.
struct SignedOrder {
  double alpha = 0.0;

  static SignedOrder derivative(double s) { return SignedOrder{s}; }
  static SignedOrder integral(double s) { return SignedOrder{-s}; }
};

// Power exponents must stay strictly above this floor: t^k is integrable on
// (0, x) only for k > -1.
inline constexpr double kExponentFloor = -1.0;

// Exponents (and trig phases) closer than this are treated as equal when
// merging terms; order arithmetic introduces rounding at this scale.
inline constexpr double kMergeTolerance = 1e-12;

// Monomial c * x^k with k > -1.
struct PowerTerm {
  double coeff = 0.0;
  double exponent = 0.0;

  PowerTerm(double coeff, double exponent);  // validates both fields
  bool operator==(const PowerTerm&) const = default;
};

enum class TrigBase { sin, cos };

// c * sin(x + phase) or c * cos(x + phase); phase kept reduced to [0, 2pi).
struct TrigTerm {
  double coeff = 0.0;
  TrigBase base = TrigBase::sin;
  double phase = 0.0;

  TrigTerm(double coeff, TrigBase base, double phase);
  bool operator==(const TrigTerm&) const = default;
};

// Finite sum of power and trig terms, kept canonical: power terms in
// descending exponent order, near-equal exponents merged, zero coefficients
// dropped; trig terms sorted by (base, phase) and merged the same way.
struct GenExpr {
  std::vector<PowerTerm> power_terms;
  std::vector<TrigTerm> trig_terms;

  void canonicalize();
  bool empty() const noexcept { return power_terms.empty() && trig_terms.empty(); }
  bool operator==(const GenExpr&) const = default;
};

// Reduce a phase to [0, 2pi).
double reduce_two_pi(double phase) noexcept;

// Coefficient of the power rule, Gamma(p+1) / Gamma(p - alpha + 1), built
// from the generalized factorial and the reciprocal gamma so that a pole in
// the denominator yields exactly 0. Identity order returns exactly 1.
// Requires p > -1.
double power_rule_coefficient(double p, double alpha);

// Power rule: c x^p maps to c * coefficient * x^(p - alpha). Returns nullopt
// when the coefficient vanishes at a gamma pole (the term is annihilated,
// e.g. the half-derivative of x^(-1/2)); throws DomainError when the result
// exponent would fall to -1 or below with a nonzero coefficient.
std::optional<PowerTerm> apply(const PowerTerm& term, SignedOrder order);

// Phase-shift rule: differentiation rotates the phase by +alpha * pi/2,
// integration by the matching negative amount. Base and coefficient are
// unchanged. Note this is the rule for the whole-line convention; it
// disagrees with the lower-limit-0 integral on trig inputs (the constant of
// integration), so the numeric engine answers a different question there.
TrigTerm apply(const TrigTerm& term, SignedOrder order);

// Term-wise application with renormalization. Domain errors from individual
// terms are rethrown annotated with the offending term.
GenExpr apply(const GenExpr& expr, SignedOrder order);

// True when the expression vanishes at the origin: every power exponent is
// positive and every trig term evaluates to 0 at x = 0. Inverse and
// composition laws hold unconditionally only on such inputs.
bool vanishes_at_origin(const GenExpr& expr);

// Plain evaluation at x >= 0.
double evaluate(const GenExpr& expr, double x);

// Largest relative deviation between the coefficients (and exponents and
// phases) of two structurally equal expressions; throws DomainError when the
// term structures differ.
double expr_deviation(const GenExpr& a, const GenExpr& b);

struct SemigroupReport {
  double max_rel_deviation = 0.0;
};

// Applies (a then b), (b then a) and (a + b) to expr and reports the largest
// pairwise deviation between the three results. A composition that violates
// a term precondition raises DomainError naming the composition.
SemigroupReport check_semigroup(const GenExpr& expr, double a, double b);

}  // namespace fracalc

#endif  // FRACALC_SYMBOLIC_HPP
