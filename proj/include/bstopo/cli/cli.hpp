#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bstopo::cli {

// Runs one subcommand. `args` excludes the program name. Returns 0 on
// success, 1 on a contract violation, invalid input or bad usage, 2 on an
// I/O or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bstopo::cli
