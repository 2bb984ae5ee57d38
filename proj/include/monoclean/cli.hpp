#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monoclean {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;  // boolean verdict false under --strict
inline constexpr int kUsage = 2;
inline constexpr int kResource = 3;
}  // namespace exit_code

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monoclean
