#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pacioli {

enum ExitStatus : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitUsage = 2,  // also parse and I/O errors
};

/// Runs one `pacioli` subcommand. `args` excludes the program name. Reports
/// go to `out`, diagnostics and usage text to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pacioli
