#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace dropk {

/// Outcome of one exhaustive verification sweep. Violations are data.
struct VerifyReport {
  std::string check;
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  std::optional<std::string> first_counterexample;

  bool ok() const { return violations == 0; }

  /// Counts one case; `describe()` is only evaluated for the first failure.
  template <class Describe>
  void record(bool passed, Describe&& describe) {
    ++cases;
    if (passed) return;
    ++violations;
    if (!first_counterexample) first_counterexample = describe();
  }

  /// Appends `other`; the earlier counterexample wins.
  void merge(const VerifyReport& other);
};

/// Line-oriented summary:
///   check: <name>
///   cases: <n>
///   violations: <n>
///   counterexample: <text>     (only when a violation was found)
std::ostream& operator<<(std::ostream& os, const VerifyReport& r);

}  // namespace dropk
