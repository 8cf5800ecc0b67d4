#pragma once

// Check reports: one record per verified equality, a human table and a
// JSON-lines rendering. Reports are deterministic given the inputs.

#include <ostream>
#include <string>
#include <vector>

namespace formsig {

struct CheckRecord {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  bool pass = true;
  long r = -1;  // extension data when applicable, -1 = not set
  long t = -1;
  std::vector<int> per_gamma;
  std::string note;
};

struct Report {
  std::vector<CheckRecord> records;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }
};

void write_table(std::ostream& os, const Report& report);
void write_json_lines(std::ostream& os, const Report& report);

// Per-ordering value rows used by the signature commands.
struct ValueRow {
  int ordering;
  long long value;
};

void write_value_rows(std::ostream& os, const std::vector<ValueRow>& rows,
                      bool json);

}  // namespace formsig
