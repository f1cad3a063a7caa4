#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace classprod::cli {

/// Exit codes: predicate true / success, predicate false, usage or resource error.
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable consulted for the default Monte Carlo seed.
inline constexpr const char* kSeedEnv = "CLASSPROD_SEED";

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace classprod::cli
