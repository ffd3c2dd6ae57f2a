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

#ifndef FRACALC_SPECIAL_FUNCTIONS_HPP
#define FRACALC_SPECIAL_FUNCTIONS_HPP

namespace fracalc {

// True when x lies within 1e-12 of a non-positive integer, i.e. on a pole of
// the gamma function. Arithmetic like p - s + 1 rarely lands on a pole
// exactly, hence the tolerance.
bool is_gamma_pole(double x) noexcept;

// Euler gamma function. Lanczos approximation (g = 7, 9 coefficients) for
// x >= 0.5, reflection formula below that. Relative error is a few 1e-16
// across [0.5, 30]. Throws PoleError at non-positive integers and
// DomainError for non-finite arguments.
double gamma(double x);

// Reciprocal gamma, 1/Gamma(x). Total: returns exactly 0 at the poles of
// gamma, so operator coefficients with a pole in the denominator vanish
// instead of overflowing.
double rgamma(double x);

// ln Gamma(x) for x > 0; overflow-safe route for large-argument ratios.
double ln_gamma(double x);

// Euler beta function B(p, q) = Gamma(p) Gamma(q) / Gamma(p+q), p > 0, q > 0.
double beta(double p, double q);

// Generalized factorial p! = Gamma(p + 1). Rejects negative integers.
double genfactorial(double p);

// sin(pi x) with argument reduction, accurate near integer x where the
// naive product pi*x loses the zero.
double sin_pi(double x) noexcept;

}  // namespace fracalc

#endif  // FRACALC_SPECIAL_FUNCTIONS_HPP
