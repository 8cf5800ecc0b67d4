#pragma once

// Command dispatch shared by the CLI. Exit codes: 0 all checks pass,
// 1 a check failed (or a search reported failure), 2 usage or input error.

#include "formsig/scenario.hpp"

#include <ostream>
#include <string>

namespace formsig {

struct CommandOptions {
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> count;
  std::optional<int> budget_height;
  std::string form_name;  // empty = first form in the scenario
};

int run_command(const std::string& command, const Scenario& scenario,
                const CommandOptions& options, std::ostream& out,
                std::ostream& err);

}  // namespace formsig
