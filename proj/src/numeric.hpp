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

#ifndef FRACALC_NUMERIC_HPP
#define FRACALC_NUMERIC_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace fracalc {

inline constexpr int kMaxQuadratureNodes = 512;

// Gaussian rule on (0,1) for the weight (1-u)^(s-1): integrates polynomials
// of degree <= 2n-1 against the weight exactly. Nodes are strictly
// increasing in (0,1); weights are positive and sum to 1/s.
struct QuadratureRule {
  double order = 0.0;  // s
  int node_count = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Jacobi rule built by the symmetric-tridiagonal eigenvalue method
// from the three-term recurrence coefficients. Memoized by (s to 12
// significant digits, n); cached results are bit-identical to a fresh build
// and the cache is safe for concurrent use.
std::shared_ptr<const QuadratureRule> jacobi_rule(double s, int n);

// Callable integrand; the label shows up in diagnostics.
struct Evaluable {
  std::function<double(double)> fn;
  std::string label = "f";

  double operator()(double x) const { return fn(x); }
};

// s-order integral of f at x > 0 with an n-node rule:
//   x^s/Gamma(s) * Int_0^1 (1-u)^(s-1) f(u x) du.
// The quadrature is applied after the substitution u = v^2, which turns the
// fractional-power behavior of f at the origin into a smooth factor; the
// kernel singularity at u = 1 stays absorbed in the Jacobi weight.
double rl_integral(const Evaluable& f, double s, double x, int n);

struct DerivativeInfo {
  bool near_origin = false;  // stencil crowds the origin; accuracy degraded
  int k = 0;                 // integer differentiation order used
};

// s-order derivative at x > 0: the k-th ordinary derivative of the
// (k-s)-order integral with k = floor(s) + 1. Integer s short-circuits to
// plain central finite differences of f itself (k - s = 0 would put
// Gamma(0) in the kernel). f must be evaluable on a neighborhood of x.
double rl_derivative(const Evaluable& f, double s, double x, int n,
                     DerivativeInfo* info = nullptr);

// Same with the intermediate integer order k chosen by the caller; requires
// integer k > s. The result is independent of k up to discretization error.
double rl_derivative_with_k(const Evaluable& f, double s, double x, int n,
                            int k, DerivativeInfo* info = nullptr);

struct KIndependenceReport {
  int k_low = 0;
  int k_high = 0;
  double value_low = 0.0;
  double value_high = 0.0;
  double rel_difference = 0.0;
};

// Evaluates the derivative through two adjacent choices of k and reports the
// relative difference between the results.
KIndependenceReport k_independence_check(const Evaluable& f, double s,
                                         double x, int n = 64);

// m-fold iterated integral of f over (0, x), evaluated literally by
// recursive Gauss-Legendre quadrature with n nodes per level. Independent
// cross-check for rl_integral at integer orders; m must be 1, 2 or 3.
double nested_integral_oracle(const Evaluable& f, int m, double x, int n);

}  // namespace fracalc

#endif  // FRACALC_NUMERIC_HPP
