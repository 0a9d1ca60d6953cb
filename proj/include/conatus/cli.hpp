#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conatus::cli {

/// Runs one CLI invocation. `args` excludes the program name. Exit status:
/// 0 success, 1 directive/operation error, 2 usage or validation failure.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Interactive loop over the same verbs; reads commands from `in` until
/// "quit" or end of input.
int run_repl(std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace conatus::cli
