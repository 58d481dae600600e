#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wz::cli {

enum ExitCode { ok = 0, not_wz = 1, parse_error = 2, structure = 3, usage = 4 };

/// Runs one command line (without the program name). Results go to out,
/// diagnostics to err; input is read for commands that take a document.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace wz::cli
