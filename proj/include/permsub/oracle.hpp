#pragma once

#include <string>
#include <vector>

namespace permsub {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct OracleReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  int passed_count() const;
};

// Every cross-validation between closed forms, recurrences, bijections and
// exhaustive generation, with all exhaustive sizes bounded by the ceiling.
// ceiling 0 yields an empty report.
OracleReport run_oracle_suite(int ceiling);

// The coefficient-table subset only (tables vs exhaustive filtering).
OracleReport run_count_checks(int ceiling);

} // namespace permsub
