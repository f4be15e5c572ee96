#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace grady {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Runs the twelve acceptance criteria in order. Criteria 7, 11 and 12 reuse
/// instances drawn by 5 and 6, so the suite always runs as a whole.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// One line: "[PASS] 3 title: detail (0.01 s)".
std::string format_result(const CriterionResult& r);

}  // namespace grady
