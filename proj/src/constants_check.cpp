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

#include "constants_check.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

#include "special_functions.hpp"

namespace fracalc {

namespace {

constexpr int kRequiredDigits = 12;
constexpr int kDigitCap = 16;

}  // namespace

int matching_significant_digits(double computed, const std::string& digits) {
  const double reference = std::strtod(digits.c_str(), nullptr);
  if (reference == 0.0 || !std::isfinite(computed)) return 0;
  if (computed == reference) return kDigitCap;
  const double rel = std::abs(computed - reference) / std::abs(reference);
  const int n = static_cast<int>(std::floor(-std::log10(rel)));
  return std::min(std::max(n, 0), kDigitCap);
}

bool ConstantsReport::all_ok() const {
  for (const ConstantEntry& e : entries)
    if (!e.flagged && e.matching_digits < kRequiredDigits) return false;
  return true;
}

ConstantsReport verify_constants() {
  const double pi = std::numbers::pi;
  const double e = std::numbers::e;
  const double e_fact = genfactorial(e);
  const double pi_fact = genfactorial(pi);
  const double pi_minus_e_fact = genfactorial(pi - e);
  const double e_minus_pi_fact = genfactorial(e - pi);
  const double pi_plus_e_fact = genfactorial(pi + e);

  ConstantsReport report;
  auto add = [&](std::string name, double computed, std::string digits,
                 bool flagged = false, std::string note = "") {
    ConstantEntry entry;
    entry.name = std::move(name);
    entry.computed = computed;
    entry.reference_digits = std::move(digits);
    entry.matching_digits =
        matching_significant_digits(computed, entry.reference_digits);
    entry.flagged = flagged;
    entry.note = std::move(note);
    report.entries.push_back(std::move(entry));
  };

  add("e!", e_fact, "4.2608204763570033817001212246477");
  add("pi!", pi_fact, "7.1880827289760327020821943451248");
  add("e!/pi!", e_fact / pi_fact, "0.59276174704850288028535455243732",
      true,
      "the reference table and the ratio derivation print different tails "
      "(...43732 vs ...44752); both diverge past double precision");
  add("e!/pi! (alt print)", e_fact / pi_fact,
      "0.59276174704850288028535455244752", true,
      "second printed tail of the same quantity");
  add("pi!/e!", pi_fact / e_fact, "1.6870184437157594556877999282426");
  add("pi-e", pi - e, "0.42331082513074800310235591192684");
  add("(pi-e)!", pi_minus_e_fact, "0.88624014769279455951495913120817");
  add("(e-pi)!", e_minus_pi_fact, "1.5452049361519017466541398778491");
  add("pi!/(pi-e)!", pi_fact / pi_minus_e_fact,
      "8.1107617926012790511128028551371");
  add("e!/(e-pi)!", e_fact / e_minus_pi_fact,
      "2.7574468451854223106173846311286");
  add("pi!/(pi-e)! * e!/(e-pi)!",
      (pi_fact / pi_minus_e_fact) * (e_fact / e_minus_pi_fact),
      "22.364994517058857454906921720114");
  add("pi+e", pi + e, "5.8598744820488384738229308546322");
  add("(pi+e)!", pi_plus_e_fact, "554.65410573726939979801315864118");
  add("pi!/(pi+e)!", pi_fact / pi_plus_e_fact,
      "0.012959577247555632826589943903911");
  add("(-1/2)!", genfactorial(-0.5), "0.88622692545275801364908374167057",
      true,
      "reference prints (-1/2)! = sqrt(pi)/2; Gamma(1/2) is sqrt(pi) = "
      "1.7724538509..., so the recomputed value deliberately disagrees");

  report.footnotes.push_back(
      "the printed line \"(e-pi)/(pi-e)! = 0.42331...\" is excluded: the "
      "quoted digits equal pi-e itself, while the stated ratio is negative "
      "(about -0.4776)");
  report.footnotes.push_back(
      "flagged entries (*) are reported for information only and do not "
      "affect the verification result");
  return report;
}

std::string render(const ConstantsReport& report) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-26s %-25s %6s  %s\n", "quantity",
                "computed", "digits", "reference digits");
  out += line;
  out += std::string(100, '-');
  out += '\n';
  for (const ConstantEntry& e : report.entries) {
    char value[32];
    std::snprintf(value, sizeof value, "%.17g", e.computed);
    std::snprintf(line, sizeof line, "%-26s %-25s %4d%s  %s\n", e.name.c_str(),
                  value, e.matching_digits, e.flagged ? "*" : " ",
                  e.reference_digits.c_str());
    out += line;
  }
  out += '\n';
  for (const ConstantEntry& e : report.entries) {
    if (!e.note.empty()) {
      out += "* ";
      out += e.name;
      out += ": ";
      out += e.note;
      out += '\n';
    }
  }
  for (const std::string& f : report.footnotes) {
    out += "note: ";
    out += f;
    out += '\n';
  }
  out += report.all_ok()
             ? "result: PASS (all unflagged entries agree to >= 12 digits)\n"
             : "result: FAIL (an unflagged entry agrees to < 12 digits)\n";
  return out;
}

}  // namespace fracalc
