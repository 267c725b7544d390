#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridkit {

/// Entry point of the `gridkit` command.  `args` excludes the program name.
/// Returns 0 on success, 1 on a domain error, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gridkit
