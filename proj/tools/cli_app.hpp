#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symdet::cli {

/// Runs one CLI invocation. Returns the process exit status:
/// 0 on success, 1 for usage or precondition violations, 2 for I/O failures.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace symdet::cli
