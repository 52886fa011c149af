#pragma once

#include <iosfwd>

namespace hecke {

// Entry point of the hecke command line tool.  Exit status: 0 success,
// 1 a mathematical check failed, 2 bad usage or input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hecke
