#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homlie::cli {

enum ExitStatus : int { ok = 0, input_error = 1, internal_error = 2 };

/// Runs one `homlie` command line. Payload goes to `out` (or the --output
/// file), diagnostics to `err`. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homlie::cli
