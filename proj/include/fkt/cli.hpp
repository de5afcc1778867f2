#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fkt {

// Runs one CLI invocation.  Reports go to `out`, diagnostics to `err`.
// Exit codes: 0 success, 1 usage or parse error, 2 validation or
// constraint violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fkt
