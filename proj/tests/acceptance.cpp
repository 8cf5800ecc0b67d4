// Acceptance suite: runs every criterion of the verification corpus and
// prints one pass/fail line each.

#include "formsig/acceptance.hpp"

#include <chrono>
#include <cstdio>

int main() {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  auto results = formsig::run_acceptance_criteria();
  bool all = true;
  for (const auto& r : results) {
    std::printf("criterion %2d (%s): %s [%s]\n", r.index, r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.detail.c_str());
    all = all && r.pass;
  }
  auto seconds = std::chrono::duration_cast<std::chrono::milliseconds>(
                     clock::now() - t0)
                     .count() /
                 1000.0;
  std::printf("acceptance: %s in %.1f s\n", all ? "PASS" : "FAIL", seconds);
  return all ? 0 : 1;
}
