#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace loewner::lab {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitGeometry = 3;
inline constexpr int kExitNonConvergence = 4;

/// Runs one command line (without the program name). Never throws; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace loewner::lab
