#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vss::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

// Runs one command. args[0] is the program name. Results go to `out`;
// errors go to `err` as "error: <Name>: <message>". Failures while reading
// the command line or its payloads exit with kUsageError, failures of the
// kernel operation itself with kDomainError.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vss::cli
