#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace eulerg {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  /// Largest observed discrepancy (or the failing quantity) and the bound it
  /// was held to.
  double worst = 0.0;
  double limit = 0.0;
  /// Most checks bound a discrepancy from above; a few (independence)
  /// require the observed quantity to stay above `limit`.
  bool lower_bound = false;
  std::string note;
};

struct VerifyOutcome {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// gamma, jets, hypergeo, meijer, euler, nonhomo and all.
const std::vector<std::string>& verify_suite_names();
bool is_verify_suite(const std::string& name);

/// Runs the property checks of one suite (or every suite for "all") on
/// random instances drawn from a generator seeded with `seed`. The same seed
/// always produces the same instances and the same report. Throws
/// Error(Parse) for an unknown suite name.
VerifyOutcome run_verify(const std::string& suite, std::uint64_t seed);

/// Fixed-width table, one line per check, followed by a summary line.
void print_verify(const VerifyOutcome& outcome, std::ostream& out);

}  // namespace eulerg
