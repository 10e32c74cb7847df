#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pinchband {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 domain failure (bad diagram, failed verification, golden mismatch),
/// 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pinchband
