#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lgmk {

/// Exit statuses of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Runs one command; args exclude the program name. Reports go to `out`
/// unless --output names a file, diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv);

}  // namespace lgmk
