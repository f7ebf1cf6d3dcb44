#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dynamo {

/// Runs one command line (without the program name). Structured output goes
/// to `out`, diagnostics to `err`. Returns 0 on success, 1 when a checked
/// property fails, 2 on usage, input or budget errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dynamo
