#include "formsig/report.hpp"

#include "json.hpp"

#include <iomanip>

namespace formsig {

int Report::passed() const {
  int n = 0;
  for (const auto& r : records)
    if (r.pass) ++n;
  return n;
}

int Report::failed() const { return static_cast<int>(records.size()) - passed(); }

void write_table(std::ostream& os, const Report& report) {
  std::size_t width = 4;
  for (const auto& r : report.records) width = std::max(width, r.name.size());
  for (const auto& r : report.records) {
    os << std::left << std::setw(static_cast<int>(width) + 2) << r.name
       << (r.pass ? "PASS" : "FAIL") << "  lhs=" << r.lhs << " rhs=" << r.rhs;
    if (r.r >= 0) os << " r=" << r.r;
    if (r.t >= 0) os << " t=" << r.t;
    if (!r.per_gamma.empty()) {
      os << " per_gamma=[";
      for (std::size_t i = 0; i < r.per_gamma.size(); ++i) {
        if (i) os << ",";
        os << r.per_gamma[i];
      }
      os << "]";
    }
    if (!r.note.empty()) os << "  " << r.note;
    os << "\n";
  }
  os << "summary: " << report.passed() << " passed, " << report.failed()
     << " failed\n";
}

void write_json_lines(std::ostream& os, const Report& report) {
  for (const auto& r : report.records) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    if (r.r >= 0) j["r"] = r.r;
    if (r.t >= 0) j["t"] = r.t;
    if (!r.per_gamma.empty()) j["per_gamma"] = r.per_gamma;
    j["pass"] = r.pass;
    if (!r.note.empty()) j["note"] = r.note;
    os << j.dump() << "\n";
  }
  nlohmann::ordered_json summary;
  summary["summary"]["passed"] = report.passed();
  summary["summary"]["failed"] = report.failed();
  os << summary.dump() << "\n";
}

void write_value_rows(std::ostream& os, const std::vector<ValueRow>& rows,
                      bool json) {
  for (const auto& row : rows) {
    if (json) {
      nlohmann::ordered_json j;
      j["ordering"] = row.ordering;
      j["value"] = row.value;
      os << j.dump() << "\n";
    } else {
      os << "ordering " << row.ordering << ": " << row.value << "\n";
    }
  }
}

}  // namespace formsig
