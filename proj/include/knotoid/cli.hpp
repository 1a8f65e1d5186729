#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotoid {

// Command-line driver; returns the process exit code. Split out from main
// so tests can invoke subcommands in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotoid
