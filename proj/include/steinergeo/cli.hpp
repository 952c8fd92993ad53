#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steinergeo {

// Command-line entry point; returns the process exit status
// (0 success, 2 usage error, 1 computation failure).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steinergeo
