#pragma once

#include <string>
#include <vector>

namespace besovrates {

// =====================================================================
// Verification property suite. Two families:
//   * identity checks: exact discrete identities, machine-precision
//     tolerances, plus inequalities that hold with an exact constant;
//   * growth checks: inequalities whose constant is measured at a
//     baseline n and must not grow by more than a factor 2 up to
//     n = 256.
// Deterministic: all random fields come from the counter RNG under a
// dedicated domain, so every run measures identical numbers.
// =====================================================================

struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;   // worst observed value
  double threshold = 0.0;  // pass iff measured <= threshold
};

std::vector<CheckResult> identity_checks();
std::vector<CheckResult> growth_checks();

/// Both suites back to back, identities first.
std::vector<CheckResult> all_checks();

}  // namespace besovrates
