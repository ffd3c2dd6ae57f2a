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

#ifndef FRACALC_SELFCHECK_HPP
#define FRACALC_SELFCHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fracalc {

inline constexpr std::uint64_t kDefaultSelfcheckSeed = 1;

struct SuiteResult {
  std::string name;
  int total = 0;
  int failed = 0;
};

struct SelfcheckReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  bool all_ok() const;
};

// Runs the randomized invariant suites (gamma recurrence, beta identity,
// operator semigroup, inverse on vanishing-at-origin inputs, k-independence,
// iterated-integral oracle equivalence, parser round trip). Deterministic
// for a given seed.
SelfcheckReport run_selfcheck(std::uint64_t seed = kDefaultSelfcheckSeed);

// Per-suite counts plus an overall PASS/FAIL line.
std::string render(const SelfcheckReport& report);

}  // namespace fracalc

#endif  // FRACALC_SELFCHECK_HPP
