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

#ifndef FRACALC_TESTS_ORACLES_HPP
#define FRACALC_TESTS_ORACLES_HPP

// Test-side brute-force integrators, kept independent of the library's
// quadrature machinery on purpose.

#include <cmath>

namespace oracles {

template <typename F>
double simpson(F&& f, double a, double b) {
  const double m = 0.5 * (a + b);
  return (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b));
}

// Plain adaptive Simpson with Richardson acceptance test.
template <typename F>
double adaptive_simpson(F&& f, double a, double b, double tol, double whole,
                        int depth) {
  const double m = 0.5 * (a + b);
  const double left = simpson(f, a, m);
  const double right = simpson(f, m, b);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, 0.5 * tol, left, depth - 1) +
         adaptive_simpson(f, m, b, 0.5 * tol, right, depth - 1);
}

template <typename F>
double integrate(F&& f, double a, double b, double tol = 1e-12) {
  return adaptive_simpson(f, a, b, tol, simpson(f, a, b), 40);
}

// Definite beta integral Int_0^1 t^(p-1) (1-t)^(q-1) dt for p >= 1, q >= 1
// (integrand bounded on the closed interval for these parameters).
inline double beta_by_quadrature(double p, double q, double tol = 1e-12) {
  return integrate(
      [p, q](double t) {
        return std::pow(t, p - 1.0) * std::pow(1.0 - t, q - 1.0);
      },
      0.0, 1.0, tol);
}

}  // namespace oracles

#endif  // FRACALC_TESTS_ORACLES_HPP
