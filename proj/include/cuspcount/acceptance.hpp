#pragma once

#include <string>
#include <vector>

namespace cuspcount {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  // First failing check, empty when pass.
  std::string detail;
};

// Runs the twelve release checks. Deterministic; exact arithmetic throughout.
std::vector<CriterionResult> run_acceptance();

}  // namespace cuspcount
