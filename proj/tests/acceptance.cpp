// Runs every acceptance criterion and prints one line per criterion.
#include "vacfocus/verify.hpp"

#include <cstdio>
#include <iostream>

int main() {
  using namespace vacfocus::verify;
  int failed = 0;
  for (int id = 1; id <= kCriterionCount; ++id) {
    const CriterionReport r = run_criterion(id);
    std::cout << summary_line(r) << std::endl;
    for (const Check& c : r.checks) {
      if (c.passed) continue;
      std::cout << "    failed check: " << c.name << " (measured " << c.measured
                << ", tolerance " << c.tolerance << ")";
      if (!c.detail.empty()) std::cout << " " << c.detail;
      std::cout << std::endl;
    }
    failed += r.passed() ? 0 : 1;
  }
  std::cout << (kCriterionCount - failed) << "/" << kCriterionCount << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
