#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leafatlas {

/// Exit codes: 0 success, 1 usage error, 2 domain or validation failure.
enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2 };

/// Entry point behind the leafatlas binary. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leafatlas
