#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace superroot::cli {

/// Runs the `superroot` command line. Returns 0 on success, 1 on a domain
/// error and 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superroot::cli
