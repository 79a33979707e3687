#pragma once

#include <iosfwd>

namespace es::cli {

// Parses and executes one command line. Exit codes:
//   0  success
//   1  query answered "not found" (no witness, no solution, verify false)
//   2  usage or domain error
//   3  arithmetic or resource error
// All output goes to the given streams; nothing is printed elsewhere.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace es::cli
