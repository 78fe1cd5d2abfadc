#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibalg::cli {

/// Runs one command line.  Returns 0 on the expected outcome, 1 on an
/// unexpected violation or I/O failure, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibalg::cli
