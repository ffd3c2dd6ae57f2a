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

#ifndef FRACALC_CONSTANTS_CHECK_HPP
#define FRACALC_CONSTANTS_CHECK_HPP

#include <string>
#include <vector>

namespace fracalc {

// One verified transcendental-order quantity: the recomputed value, the
// reference digit string it is compared with, and how many leading
// significant digits agree. Flagged entries are informational (the reference
// digits themselves are suspect) and never fail the report.
struct ConstantEntry {
  std::string name;
  double computed = 0.0;
  std::string reference_digits;
  int matching_digits = 0;
  bool flagged = false;
  std::string note;
};

struct ConstantsReport {
  std::vector<ConstantEntry> entries;
  std::vector<std::string> footnotes;

  // Every unflagged entry agrees to at least 12 significant digits.
  bool all_ok() const;
};

// Number of leading significant digits on which `computed` agrees with the
// value written in `digits`, measured through the relative difference and
// capped at 16 (past that double precision cannot tell).
int matching_significant_digits(double computed, const std::string& digits);

// Recomputes the generalized-factorial quantities for the orders pi and e
// and compares each against its reference digit string.
ConstantsReport verify_constants();

// Aligned text table with per-entry notes and footnotes.
std::string render(const ConstantsReport& report);

}  // namespace fracalc

#endif  // FRACALC_CONSTANTS_CHECK_HPP
