#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asai {

// Runs one CLI invocation.  Exit codes: 0 success, 2 schema/validation
// error, 3 structurally valid but unsupported input, 1 internal fault.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace asai
