#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace igusa {

// Runs the command line tool on args (without the program name). Results go
// to out, diagnostics to err; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace igusa
