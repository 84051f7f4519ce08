#pragma once

#include <functional>
#include <string>
#include <vector>

namespace chf::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;   // worst observed quantity against its threshold
  double seconds = 0.0;
};

/// Runs one criterion (1..9). Throws std::out_of_range otherwise.
CriterionResult run_criterion(int id);

/// All nine in order; `on_result` is called as each finishes.
std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 3 identities (0.41 s): ..." style line.
std::string format_line(const CriterionResult& r);

}  // namespace chf::acceptance
