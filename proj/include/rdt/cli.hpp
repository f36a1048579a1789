#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rdt {

/// Runs one CLI invocation. Reports go to `out` as JSON, logs to `err`.
/// Exit codes: 0 success, 1 mathematically valid negative finding,
/// 2 input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rdt
