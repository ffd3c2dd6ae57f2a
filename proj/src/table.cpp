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

#include "table.hpp"

#include <cmath>
#include <cstdio>

#include "errors.hpp"
#include "numeric.hpp"

namespace fracalc {

EvalTable make_table(const GenExpr& expr, SignedOrder order, Engine engine,
                     int nodes, double start, double stop, int steps) {
  if (!(start > 0.0) || !std::isfinite(start) || !std::isfinite(stop))
    throw DomainError("make_table: grid start must be positive and finite");
  if (stop < start) throw DomainError("make_table: grid stop must be >= start");
  if (steps < 1) throw DomainError("make_table: need at least one step");
  if (steps > 1 && !(stop > start))
    throw DomainError("make_table: multiple steps need stop > start");

  EvalTable table;
  table.rows.reserve(static_cast<std::size_t>(steps));

  GenExpr closed_result;
  if (engine == Engine::closed) closed_result = apply(expr, order);
  const Evaluable f{[&expr](double y) { return evaluate(expr, y); }, "expr"};

  for (int i = 0; i < steps; ++i) {
    const double x =
        steps == 1 ? start
                   : (i == steps - 1
                          ? stop
                          : start + (stop - start) * i / (steps - 1));
    double value;
    if (engine == Engine::closed) {
      value = evaluate(closed_result, x);
    } else if (order.alpha == 0.0) {
      value = evaluate(expr, x);
    } else if (order.alpha < 0.0) {
      value = rl_integral(f, -order.alpha, x, nodes);
    } else {
      value = rl_derivative(f, order.alpha, x, nodes);
    }
    table.rows.emplace_back(x, value);
  }
  return table;
}

std::string to_csv(const EvalTable& table) {
  std::string out = "x,value\n";
  char line[80];
  for (const auto& [x, value] : table.rows) {
    std::snprintf(line, sizeof line, "%.17g,%.17g\n", x, value);
    out += line;
  }
  return out;
}

}  // namespace fracalc
