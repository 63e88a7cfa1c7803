#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tlim::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // worst observed quantity against its threshold
};

// Runs every criterion on the built-in catalog.
std::vector<CriterionResult> run_all();

// One "PASS"/"FAIL" line per criterion; returns the number of failures.
int print(std::ostream& out, const std::vector<CriterionResult>& results);

}  // namespace tlim::acceptance
