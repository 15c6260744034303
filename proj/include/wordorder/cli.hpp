#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wordorder {

/// Runs the command-line interface on `args` (without the program name).
/// Exit codes: 0 success / comparison true, 1 comparison false or failed
/// selftest, 2 usage error, 3 domain error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wordorder
