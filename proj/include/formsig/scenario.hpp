#pragma once

// Declarative scenario files: sectioned key-value text with nested lists
// and tables, rationals written p/q. Loading validates every structural
// invariant and reports errors with line locations.

#include "formsig/hermform.hpp"
#include "formsig/involutive.hpp"
#include "formsig/quadform.hpp"
#include "formsig/relative.hpp"
#include "formsig/signature.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace formsig {

struct ScenarioError : std::runtime_error {
  int line;
  ScenarioError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what),
        line(line_) {}
};

// Parsed value tree.
struct Value {
  using List = std::vector<Value>;
  using Table = std::vector<std::pair<std::string, Value>>;
  std::variant<Rational, std::string, List, Table> v;
  int line = 0;

  bool is_rational() const { return std::holds_alternative<Rational>(v); }
  bool is_string() const { return std::holds_alternative<std::string>(v); }
  bool is_list() const { return std::holds_alternative<List>(v); }
  bool is_table() const { return std::holds_alternative<Table>(v); }
};

// A hermitian form over the extended algebra given by central y-polynomial
// diagonal entries (the shape the scenario format supports).
struct ExtendedDiagonal {
  std::string name;
  std::vector<TotalElement> entries;
};

struct Scenario {
  std::optional<EtaleAlgebra> base;
  std::optional<RelativeEtale> extension;
  std::optional<InvolutiveAlgebra> algebra;
  std::optional<InvolutiveAlgebra> algebra_target;
  std::vector<std::pair<std::string, HermForm>> forms;
  std::vector<std::pair<std::string, QuadForm>> quadforms;
  std::vector<ExtendedDiagonal> extended_forms;

  std::uint64_t seed = 0;
  int count = 0;
  SearchBudget budget;
  std::optional<std::vector<int>> target_total;

  const HermForm* find_form(const std::string& name) const;
  const QuadForm* find_quadform(const std::string& name) const;
  const ExtendedDiagonal* find_extended(const std::string& name) const;
};

Scenario load_scenario_text(const std::string& text);
Scenario load_scenario(const std::string& path);

// Canonical serialization; load(serialize(s)) reproduces s bit-exactly for
// scenarios produced by corpus_generate.
std::string serialize_scenario(const Scenario& s);

// Deterministic pseudo-random trace-formula scenarios within the documented
// budgets (extension degree <= 4, coefficients <= 9, diagonal entries unit
// y-polynomials).
std::vector<Scenario> corpus_generate(std::uint64_t seed, int size);

}  // namespace formsig
