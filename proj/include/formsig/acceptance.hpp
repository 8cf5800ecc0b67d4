#pragma once

// The built-in verification corpus: one entry per criterion, each checked
// exactly (integer equality, no tolerances). Used by the acceptance test
// binary and by the selftest command.

#include <string>
#include <vector>

namespace formsig {

struct CriterionResult {
  int index;
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<CriterionResult> run_acceptance_criteria();

}  // namespace formsig
