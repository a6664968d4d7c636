#pragma once

// The seven acceptance criteria, runnable one at a time.

#include <string>
#include <vector>

namespace betahole {

constexpr int kCriterionCount = 7;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  int checks = 0;
  std::vector<std::string> failures;
  double seconds = 0;
};

/// Throws Error("InvalidCriterion") outside 1..7.
const char* criterion_name(int id);
CriterionResult run_criterion(int id);

}  // namespace betahole
