#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace classprod {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Cross-validation of every route against the others at a scale that runs in
/// well under a second. Seeded parts use `seed`.
std::vector<CheckResult> run_selfcheck(std::uint64_t seed);

}  // namespace classprod
