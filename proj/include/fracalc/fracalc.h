/* Copyright 2026 fracalc developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the fracalc shared library.
 *
 * fracalc evaluates integral and derivative operators of arbitrary positive
 * real order on generalized polynomials (sums of a*x^k with real k > -1)
 * and sin/cos terms. Orders are passed as one signed parameter alpha:
 * alpha > 0 differentiates, alpha < 0 integrates, alpha == 0 is the
 * identity. Closed-form results come from the power rule
 * Gamma(k+1)/Gamma(k-alpha+1) * x^(k-alpha) and the trig phase-shift rule;
 * numeric results from weighted Gauss-Jacobi quadrature of the singular
 * kernel and finite differences.
 *
 * Every function that can fail returns fc_status; fc_last_error() describes
 * the most recent failure on the calling thread. Handles and strings
 * returned through out-parameters are owned by the caller and released with
 * fc_expr_free / fc_string_free.
 */

#ifndef FRACALC_H
#define FRACALC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fc_status {
  FC_OK = 0,
  FC_ERR_INVALID_ARGUMENT = 1, /* null pointer or out-of-range plain argument */
  FC_ERR_PARSE = 2,            /* malformed expression text */
  FC_ERR_DOMAIN = 3,           /* argument outside an operation's domain */
  FC_ERR_POLE = 4,             /* gamma evaluated at a non-positive integer */
  FC_ERR_VERIFY = 5,           /* verification or selfcheck failed */
  FC_ERR_INTERNAL = 6
} fc_status;

/* Opaque parsed expression. */
typedef struct fc_expr fc_expr;

const char* fc_version(void);

/* Message for the last failure on this thread; empty string when none. */
const char* fc_last_error(void);

/* Byte span of the last parse error on this thread; -1/-1 when the last
 * failure was not a parse error. */
void fc_last_error_span(long* begin, long* end);

/* --- expressions ------------------------------------------------------- */

/* Grammar: linear combinations of number, number*x^k, x^k, sin(x), cos(x),
 * with pi and e accepted wherever a number is. Multiplication is explicit.
 * Exponents must exceed -1. */
fc_status fc_expr_parse(const char* text, fc_expr** out);
void fc_expr_free(fc_expr* expr);

/* Canonical text form; round-trips through fc_expr_parse exactly. */
fc_status fc_expr_format(const fc_expr* expr, char** out);
void fc_string_free(char* s);

/* Closed-form operator application (power rule + phase shift). */
fc_status fc_expr_apply(const fc_expr* expr, double alpha, fc_expr** out);

fc_status fc_expr_eval(const fc_expr* expr, double x, double* out);

/* 1 when the expression vanishes at the origin (all power exponents
 * positive, all trig terms zero at x = 0); inverse and composition laws
 * hold unconditionally only for such expressions. */
fc_status fc_expr_vanishes_at_origin(const fc_expr* expr, int* out);

/* Term introspection; power terms are ordered by descending exponent. */
int fc_expr_power_term_count(const fc_expr* expr);
int fc_expr_trig_term_count(const fc_expr* expr);
fc_status fc_expr_power_term(const fc_expr* expr, int index, double* coeff,
                             double* exponent);
fc_status fc_expr_trig_term(const fc_expr* expr, int index, double* coeff,
                            int* is_cosine, double* phase);

/* --- numeric engine ----------------------------------------------------- */

typedef double (*fc_eval_fn)(double x, void* ctx);

/* order-s integral of fn at x > 0 via an n-node Gauss-Jacobi rule
 * (1 <= nodes <= 512); s must be positive. */
fc_status fc_integral(fc_eval_fn fn, void* ctx, double order, double x,
                      int nodes, double* out);

/* order-s derivative at x > 0 through the integer-derivative-of-integral
 * construction. near_origin (optional) is set to 1 when the difference
 * stencil crowds the origin and accuracy degrades. */
fc_status fc_derivative(fc_eval_fn fn, void* ctx, double order, double x,
                        int nodes, double* out, int* near_origin);

/* Conveniences evaluating a parsed expression numerically. */
fc_status fc_expr_integral(const fc_expr* expr, double order, double x,
                           int nodes, double* out);
fc_status fc_expr_derivative(const fc_expr* expr, double order, double x,
                             int nodes, double* out, int* near_origin);

/* --- tables and verification ------------------------------------------- */

/* CSV table of the operator applied to expr on an inclusive grid of `steps`
 * points from start to stop: header "x,value", 17 significant digits, LF
 * line endings. numeric_engine selects per-point quadrature instead of the
 * closed form. */
fc_status fc_table_csv(const fc_expr* expr, double alpha, int numeric_engine,
                       int nodes, double start, double stop, int steps,
                       char** out);

/* Recomputes the transcendental-order reference quantities (e!, pi!, their
 * ratios and products) and renders a digit-agreement table. all_ok is 1 when
 * every unflagged entry agrees to at least 12 significant digits. */
fc_status fc_constants_report(char** report, int* all_ok);

/* Runs the randomized invariant suites; deterministic per seed. */
fc_status fc_selfcheck(uint64_t seed, char** report, int* all_ok);

#ifdef __cplusplus
}
#endif

#endif /* FRACALC_H */
