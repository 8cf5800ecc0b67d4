// Command-line front end: exact signatures of quadratic and hermitian forms
// over etale algebras and matrix algebras with involution, trace-transfer
// checks, and the built-in verification corpus.

#include "CLI11.hpp"
#include "formsig/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"exact signatures of forms over algebras with involution"};
  app.require_subcommand(1);

  std::string scenario_path;
  formsig::CommandOptions options;
  std::uint64_t seed_flag = 0;
  int count_flag = 0;
  int height_flag = 0;

  const std::vector<std::string> commands = {
      "orderings", "sign",       "total",        "transfer-check",
      "ktf-verify", "morita-check", "nil",       "find-ref",
      "two-power", "selftest"};

  std::vector<CLI::App*> subs;
  for (const auto& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--scenario", scenario_path, "scenario file");
    sub->add_flag("--json", options.json, "JSON-lines output");
    sub->add_option("--seed", seed_flag, "override the scenario seed")
        ->default_val(std::uint64_t{0});
    sub->add_option("--count", count_flag, "corpus size for ktf-verify");
    sub->add_option("--budget-height", height_flag, "search height budget");
    sub->add_option("--form", options.form_name, "form name to use");
    subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  CLI::App* chosen = nullptr;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (subs[i]->parsed()) chosen = subs[i];
  if (!chosen) {
    std::cerr << "no command given\n";
    return 2;
  }
  const std::string command = chosen->get_name();
  if (chosen->count("--seed")) options.seed = seed_flag;
  if (chosen->count("--count")) options.count = count_flag;
  if (chosen->count("--budget-height")) options.budget_height = height_flag;

  try {
    formsig::Scenario scenario;
    if (chosen->count("--scenario")) {
      scenario = formsig::load_scenario(scenario_path);
    } else if (command != "selftest" && command != "ktf-verify") {
      std::cerr << "usage error: --scenario is required for " << command << "\n";
      return 2;
    } else if (command == "ktf-verify" && !options.count) {
      std::cerr << "usage error: ktf-verify needs --scenario or --count\n";
      return 2;
    }
    return formsig::run_command(command, scenario, options, std::cout,
                                std::cerr);
  } catch (const formsig::ScenarioError& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
