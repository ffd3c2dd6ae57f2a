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

// Command-line frontend over the fracalc C API.
//
// Exit codes: 0 success, 1 usage error, 2 parse error, 3 domain error,
// 4 verification/selfcheck failure.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fracalc/fracalc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;

int exit_code_for(fc_status status) {
  switch (status) {
    case FC_OK:
      return kExitOk;
    case FC_ERR_PARSE:
      return kExitParse;
    case FC_ERR_DOMAIN:
    case FC_ERR_POLE:
      return kExitDomain;
    case FC_ERR_VERIFY:
      return kExitVerify;
    case FC_ERR_INVALID_ARGUMENT:
    case FC_ERR_INTERNAL:
    default:
      return kExitUsage;
  }
}

int report_error(fc_status status) {
  std::fprintf(stderr, "fracalc: %s\n", fc_last_error());
  return exit_code_for(status);
}

struct ExprDeleter {
  void operator()(fc_expr* e) const { fc_expr_free(e); }
};
using ExprPtr = std::unique_ptr<fc_expr, ExprDeleter>;

struct StringDeleter {
  void operator()(char* s) const { fc_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct EvalOptions {
  std::string op;
  double order = 0.0;
  std::string expr;
  std::optional<double> at;
  std::string engine = "closed";
  int nodes = 64;
};

struct TableOptions : EvalOptions {
  std::string grid;
};

int parse_expr(const std::string& text, ExprPtr& out) {
  fc_expr* raw = nullptr;
  const fc_status status = fc_expr_parse(text.c_str(), &raw);
  if (status != FC_OK) return report_error(status);
  out.reset(raw);
  return kExitOk;
}

double signed_order(const EvalOptions& opt) {
  return opt.op == "J" ? -opt.order : opt.order;
}

int run_eval(const EvalOptions& opt) {
  ExprPtr expr;
  if (int rc = parse_expr(opt.expr, expr)) return rc;
  const double alpha = signed_order(opt);

  if (opt.engine == "closed") {
    fc_expr* applied_raw = nullptr;
    fc_status status = fc_expr_apply(expr.get(), alpha, &applied_raw);
    if (status != FC_OK) return report_error(status);
    ExprPtr applied(applied_raw);
    char* text = nullptr;
    status = fc_expr_format(applied.get(), &text);
    if (status != FC_OK) return report_error(status);
    StringPtr text_owner(text);
    std::printf("%s\n", text);
    if (opt.at) {
      double value = 0.0;
      status = fc_expr_eval(applied.get(), *opt.at, &value);
      if (status != FC_OK) return report_error(status);
      std::printf("%.17g\n", value);
    }
    return kExitOk;
  }

  // numeric engine needs a point
  if (!opt.at) {
    std::fprintf(stderr, "fracalc: --engine numeric requires --at\n");
    return kExitUsage;
  }
  double value = 0.0;
  fc_status status;
  int near_origin = 0;
  if (alpha == 0.0) {
    status = fc_expr_eval(expr.get(), *opt.at, &value);
  } else if (alpha < 0.0) {
    status = fc_expr_integral(expr.get(), -alpha, *opt.at, opt.nodes, &value);
  } else {
    status = fc_expr_derivative(expr.get(), alpha, *opt.at, opt.nodes, &value,
                                &near_origin);
  }
  if (status != FC_OK) return report_error(status);
  if (near_origin)
    std::fprintf(stderr,
                 "fracalc: warning: evaluation point crowds the origin; "
                 "derivative accuracy is degraded\n");
  std::printf("%.17g\n", value);
  return kExitOk;
}

int run_table(const TableOptions& opt) {
  double start = 0.0, stop = 0.0;
  int steps = 0;
  char trailing = '\0';
  if (std::sscanf(opt.grid.c_str(), "%lf:%lf:%d%c", &start, &stop, &steps,
                  &trailing) != 3) {
    std::fprintf(stderr, "fracalc: --grid expects <start>:<stop>:<steps>\n");
    return kExitUsage;
  }
  ExprPtr expr;
  if (int rc = parse_expr(opt.expr, expr)) return rc;
  char* csv = nullptr;
  const fc_status status =
      fc_table_csv(expr.get(), signed_order(opt), opt.engine == "numeric",
                   opt.nodes, start, stop, steps, &csv);
  if (status != FC_OK) return report_error(status);
  StringPtr csv_owner(csv);
  std::fputs(csv, stdout);
  return kExitOk;
}

int run_verify_constants() {
  char* report = nullptr;
  int all_ok = 0;
  const fc_status status = fc_constants_report(&report, &all_ok);
  if (status != FC_OK) return report_error(status);
  StringPtr owner(report);
  std::fputs(report, stdout);
  return all_ok ? kExitOk : kExitVerify;
}

int run_selfcheck(std::uint64_t seed) {
  char* report = nullptr;
  int all_ok = 0;
  const fc_status status = fc_selfcheck(seed, &report, &all_ok);
  if (status != FC_OK) return report_error(status);
  StringPtr owner(report);
  std::fputs(report, stdout);
  return all_ok ? kExitOk : kExitVerify;
}

void add_common_flags(CLI::App* cmd, EvalOptions& opt) {
  cmd->add_option("--op", opt.op, "operator: D (derivative) or J (integral)")
      ->required()
      ->check(CLI::IsMember({"D", "J"}));
  cmd->add_option("--order", opt.order, "operator order (real, >= 0)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--expr", opt.expr, "expression text, e.g. \"3*x^2.5 - 2*x + sin(x)\"")
      ->required();
  cmd->add_option("--engine", opt.engine, "closed | numeric")
      ->check(CLI::IsMember({"closed", "numeric"}))
      ->capture_default_str();
  cmd->add_option("--nodes", opt.nodes, "quadrature nodes (1..512)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractional-order integral and derivative calculator"};
  app.require_subcommand(1);

  EvalOptions eval_opt;
  CLI::App* eval = app.add_subcommand(
      "eval", "apply an operator to an expression and print the result");
  add_common_flags(eval, eval_opt);
  double at_value = 0.0;
  CLI::Option* at_option =
      eval->add_option("--at", at_value, "evaluation point (required for numeric)");

  TableOptions table_opt;
  CLI::App* table = app.add_subcommand(
      "table", "emit a CSV table of operator values over an x grid");
  add_common_flags(table, table_opt);
  table->add_option("--grid", table_opt.grid, "grid as <start>:<stop>:<steps>")
      ->required();

  CLI::App* verify = app.add_subcommand(
      "verify-constants",
      "recompute the transcendental-order constants and report digit agreement");

  std::uint64_t seed = 1;
  CLI::App* selfcheck =
      app.add_subcommand("selfcheck", "run the built-in invariant suites");
  selfcheck->add_option("--seed", seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (eval->parsed()) {
    if (*at_option) eval_opt.at = at_value;
    return run_eval(eval_opt);
  }
  if (table->parsed()) return run_table(table_opt);
  if (verify->parsed()) return run_verify_constants();
  if (selfcheck->parsed()) return run_selfcheck(seed);
  return kExitUsage;
}
