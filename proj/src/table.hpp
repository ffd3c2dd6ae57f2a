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

#ifndef FRACALC_TABLE_HPP
#define FRACALC_TABLE_HPP

#include <string>
#include <utility>
#include <vector>

#include "symbolic.hpp"

namespace fracalc {

enum class Engine { closed, numeric };

// Grid of (x, value) samples; x strictly increasing.
struct EvalTable {
  std::vector<std::pair<double, double>> rows;
};

// Applies the operator of the given signed order to expr and samples the
// result on `steps` evenly spaced points from start to stop (inclusive; a
// single step samples only start). The closed engine applies the power and
// phase-shift rules once and evaluates; the numeric engine integrates or
// differentiates at every grid point with an n-node rule.
EvalTable make_table(const GenExpr& expr, SignedOrder order, Engine engine,
                     int nodes, double start, double stop, int steps);

// CSV rendering: header "x,value", one row per grid point, 17 significant
// digits, LF line endings, no trailing whitespace. Non-finite values print
// as inf/-inf/nan.
std::string to_csv(const EvalTable& table);

}  // namespace fracalc

#endif  // FRACALC_TABLE_HPP
