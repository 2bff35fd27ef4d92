#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubiq::cli {

/// Dispatches one command-line invocation. `args` excludes the program
/// name. Returns the process exit code: 0 on success, 1 when a
/// verification command found a violated identity, 2 on usage or parse
/// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubiq::cli
