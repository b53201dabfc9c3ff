#pragma once

#include <string>
#include <vector>

#include "koszul/fixtures.hpp"

namespace koszul {

struct RegressionReport {
  int rows_checked = 0;
  int rows_failed = 0;
  int census_checked = 0;   // fibration entries compared
  int census_failed = 0;
  int classical_checked = 0;  // classical samples compared
  int classical_failed = 0;
  std::vector<std::string> mismatches;          // one line each, computed vs expected
  std::vector<int> census_breakdown;            // per-group fibration counts
  int census_total = 0;

  bool ok() const { return rows_failed == 0 && census_failed == 0 && classical_failed == 0; }
};

// Recomputes every fixture entry and compares exactly. Discrepancy-listed
// fields are compared against their corrected values. The census is
// recomputed from the spin rows of the same fixture.
RegressionReport run_regression(const Fixture& fixture);

}  // namespace koszul
