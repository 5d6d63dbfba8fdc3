#pragma once

#include <string>
#include <utility>
#include <vector>

namespace closys {

/// Outcome of one verification step. Informational results are reported
/// but never count as failures.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::string details;
  bool informational = false;
};

inline bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.informational && !c.pass) return false;
  return true;
}

inline CheckResult check(std::string name, bool pass, std::string details = {}) {
  return {std::move(name), pass, std::move(details), false};
}

}  // namespace closys
