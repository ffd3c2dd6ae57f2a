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

#ifndef FRACALC_TEST_HOOKS_HPP
#define FRACALC_TEST_HOOKS_HPP

// Fault-injection hooks for exercising the selfcheck suites. Internal: this
// header lives under src/ and is not installed with the public C API.

namespace fracalc::detail {

// Additive perturbation applied to every gamma() result; 0 disables.
void set_gamma_perturbation(double eps) noexcept;
double gamma_perturbation() noexcept;

}  // namespace fracalc::detail

#endif  // FRACALC_TEST_HOOKS_HPP
