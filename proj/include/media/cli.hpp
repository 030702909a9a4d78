#pragma once

#include <iosfwd>

namespace media {

// Exit status of the command line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_false = 1,   // the answer is "no" (not a medium, not a partial cube, ...)
  exit_parse = 2,   // malformed command line or input
  exit_cap = 3,     // a size or work cap was hit
  exit_defect = 4,  // internal consistency check failed
};

// Runs the media-cli command line. Input "-" (or no path) reads `in`; JSON goes
// to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace media
