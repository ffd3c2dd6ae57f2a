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

#include "fracalc/fracalc.h"

#include <cstring>
#include <new>
#include <string>

#include "constants_check.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "parser.hpp"
#include "selfcheck.hpp"
#include "symbolic.hpp"
#include "table.hpp"

struct fc_expr {
  fracalc::GenExpr value;
};

namespace {

thread_local std::string g_last_error;
thread_local long g_error_span_begin = -1;
thread_local long g_error_span_end = -1;

void clear_error() {
  g_last_error.clear();
  g_error_span_begin = -1;
  g_error_span_end = -1;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs the body, translating exceptions into status codes and the
// thread-local error message.
template <typename Fn>
fc_status guarded(Fn&& body) noexcept {
  clear_error();
  try {
    return body();
  } catch (const fracalc::ParseError& e) {
    g_last_error = e.what();
    g_error_span_begin = static_cast<long>(e.span().begin);
    g_error_span_end = static_cast<long>(e.span().end);
    return FC_ERR_PARSE;
  } catch (const fracalc::PoleError& e) {
    g_last_error = e.what();
    return FC_ERR_POLE;
  } catch (const fracalc::DomainError& e) {
    g_last_error = e.what();
    return FC_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return FC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FC_ERR_INTERNAL;
  }
}

fc_status invalid(const char* message) {
  g_last_error = message;
  g_error_span_begin = -1;
  g_error_span_end = -1;
  return FC_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* fc_version(void) { return "1.0.0"; }

const char* fc_last_error(void) { return g_last_error.c_str(); }

void fc_last_error_span(long* begin, long* end) {
  if (begin) *begin = g_error_span_begin;
  if (end) *end = g_error_span_end;
}

fc_status fc_expr_parse(const char* text, fc_expr** out) {
  if (!text || !out) return invalid("fc_expr_parse: null argument");
  *out = nullptr;
  return guarded([&] {
    auto expr = new fc_expr{fracalc::parse(text)};
    *out = expr;
    return FC_OK;
  });
}

void fc_expr_free(fc_expr* expr) { delete expr; }

fc_status fc_expr_format(const fc_expr* expr, char** out) {
  if (!expr || !out) return invalid("fc_expr_format: null argument");
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(fracalc::format(expr->value));
    return FC_OK;
  });
}

void fc_string_free(char* s) { delete[] s; }

fc_status fc_expr_apply(const fc_expr* expr, double alpha, fc_expr** out) {
  if (!expr || !out) return invalid("fc_expr_apply: null argument");
  *out = nullptr;
  return guarded([&] {
    auto result =
        new fc_expr{fracalc::apply(expr->value, fracalc::SignedOrder{alpha})};
    *out = result;
    return FC_OK;
  });
}

fc_status fc_expr_eval(const fc_expr* expr, double x, double* out) {
  if (!expr || !out) return invalid("fc_expr_eval: null argument");
  return guarded([&] {
    *out = fracalc::evaluate(expr->value, x);
    return FC_OK;
  });
}

fc_status fc_expr_vanishes_at_origin(const fc_expr* expr, int* out) {
  if (!expr || !out) return invalid("fc_expr_vanishes_at_origin: null argument");
  return guarded([&] {
    *out = fracalc::vanishes_at_origin(expr->value) ? 1 : 0;
    return FC_OK;
  });
}

int fc_expr_power_term_count(const fc_expr* expr) {
  return expr ? static_cast<int>(expr->value.power_terms.size()) : -1;
}

int fc_expr_trig_term_count(const fc_expr* expr) {
  return expr ? static_cast<int>(expr->value.trig_terms.size()) : -1;
}

fc_status fc_expr_power_term(const fc_expr* expr, int index, double* coeff,
                             double* exponent) {
  if (!expr || !coeff || !exponent)
    return invalid("fc_expr_power_term: null argument");
  if (index < 0 ||
      index >= static_cast<int>(expr->value.power_terms.size()))
    return invalid("fc_expr_power_term: index out of range");
  clear_error();
  *coeff = expr->value.power_terms[index].coeff;
  *exponent = expr->value.power_terms[index].exponent;
  return FC_OK;
}

fc_status fc_expr_trig_term(const fc_expr* expr, int index, double* coeff,
                            int* is_cosine, double* phase) {
  if (!expr || !coeff || !is_cosine || !phase)
    return invalid("fc_expr_trig_term: null argument");
  if (index < 0 || index >= static_cast<int>(expr->value.trig_terms.size()))
    return invalid("fc_expr_trig_term: index out of range");
  clear_error();
  const fracalc::TrigTerm& t = expr->value.trig_terms[index];
  *coeff = t.coeff;
  *is_cosine = t.base == fracalc::TrigBase::cos ? 1 : 0;
  *phase = t.phase;
  return FC_OK;
}

fc_status fc_integral(fc_eval_fn fn, void* ctx, double order, double x,
                      int nodes, double* out) {
  if (!fn || !out) return invalid("fc_integral: null argument");
  return guarded([&] {
    const fracalc::Evaluable f{[fn, ctx](double y) { return fn(y, ctx); },
                               "callback"};
    *out = fracalc::rl_integral(f, order, x, nodes);
    return FC_OK;
  });
}

fc_status fc_derivative(fc_eval_fn fn, void* ctx, double order, double x,
                        int nodes, double* out, int* near_origin) {
  if (!fn || !out) return invalid("fc_derivative: null argument");
  return guarded([&] {
    const fracalc::Evaluable f{[fn, ctx](double y) { return fn(y, ctx); },
                               "callback"};
    fracalc::DerivativeInfo info;
    *out = fracalc::rl_derivative(f, order, x, nodes, &info);
    if (near_origin) *near_origin = info.near_origin ? 1 : 0;
    return FC_OK;
  });
}

fc_status fc_expr_integral(const fc_expr* expr, double order, double x,
                           int nodes, double* out) {
  if (!expr || !out) return invalid("fc_expr_integral: null argument");
  return guarded([&] {
    const fracalc::Evaluable f{
        [expr](double y) { return fracalc::evaluate(expr->value, y); },
        "expr"};
    *out = fracalc::rl_integral(f, order, x, nodes);
    return FC_OK;
  });
}

fc_status fc_expr_derivative(const fc_expr* expr, double order, double x,
                             int nodes, double* out, int* near_origin) {
  if (!expr || !out) return invalid("fc_expr_derivative: null argument");
  return guarded([&] {
    const fracalc::Evaluable f{
        [expr](double y) { return fracalc::evaluate(expr->value, y); },
        "expr"};
    fracalc::DerivativeInfo info;
    *out = fracalc::rl_derivative(f, order, x, nodes, &info);
    if (near_origin) *near_origin = info.near_origin ? 1 : 0;
    return FC_OK;
  });
}

fc_status fc_table_csv(const fc_expr* expr, double alpha, int numeric_engine,
                       int nodes, double start, double stop, int steps,
                       char** out) {
  if (!expr || !out) return invalid("fc_table_csv: null argument");
  *out = nullptr;
  return guarded([&] {
    const fracalc::EvalTable table = fracalc::make_table(
        expr->value, fracalc::SignedOrder{alpha},
        numeric_engine ? fracalc::Engine::numeric : fracalc::Engine::closed,
        nodes, start, stop, steps);
    *out = copy_string(fracalc::to_csv(table));
    return FC_OK;
  });
}

fc_status fc_constants_report(char** report, int* all_ok) {
  if (!report || !all_ok) return invalid("fc_constants_report: null argument");
  *report = nullptr;
  return guarded([&] {
    const fracalc::ConstantsReport r = fracalc::verify_constants();
    *report = copy_string(fracalc::render(r));
    *all_ok = r.all_ok() ? 1 : 0;
    return FC_OK;
  });
}

fc_status fc_selfcheck(uint64_t seed, char** report, int* all_ok) {
  if (!report || !all_ok) return invalid("fc_selfcheck: null argument");
  *report = nullptr;
  return guarded([&] {
    const fracalc::SelfcheckReport r = fracalc::run_selfcheck(seed);
    *report = copy_string(fracalc::render(r));
    *all_ok = r.all_ok() ? 1 : 0;
    return FC_OK;
  });
}

}  // extern "C"
