#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kuramoto_signed::cli {

/// Parses `args` (without the program name), runs the subcommand and maps failures to exit
/// codes: 0 success, 1 assertion failure, 2 usage or configuration error, 3 numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kuramoto_signed::cli
