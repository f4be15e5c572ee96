#pragma once

#include <string>
#include <vector>

namespace grady {

enum class CheckStatus { pass, fail, assumed, unsupported };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::assumed: return "assumed";
    case CheckStatus::unsupported: return "unsupported";
  }
  return "unknown";
}

struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

using Report = std::vector<CheckEntry>;

inline bool report_passes(const Report& r) {
  for (const auto& e : r)
    if (e.status == CheckStatus::fail || e.status == CheckStatus::unsupported) return false;
  return true;
}

}  // namespace grady
