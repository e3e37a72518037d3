#pragma once

#include <string>
#include <vector>

namespace vacfocus::verify {

struct Check {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct CriterionReport {
  int id = 0;
  std::string title;
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0.0;
  double time_limit = 0.0;

  bool passed() const;
};

inline constexpr int kCriterionCount = 10;

/// Runs acceptance criterion `id` (1..10). Never throws for a failing check;
/// an exception inside a check becomes a failed check carrying its message.
CriterionReport run_criterion(int id);

/// Suite names accepted by suite_criteria: series, geometry, integrals,
/// observables, census, lab, properties, all.
std::vector<std::string> suite_names();
/// Criterion ids in a suite; throws std::invalid_argument for unknown names.
std::vector<int> suite_criteria(const std::string& suite);

/// One line per criterion: "[PASS] criterion N: title (…)".
std::string summary_line(const CriterionReport& r);

}  // namespace vacfocus::verify
