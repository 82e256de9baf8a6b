#pragma once

#include <iosfwd>

namespace qtsp {

// Parses argv and runs one subcommand, writing the report to `out` (or the
// file named by --output) and diagnostics to `err`.
//
// Exit codes: 0 success, 1 usage error, 2 malformed input file,
// 3 size limit exceeded, 4 search failure.
//
// All lengths in reports are in normalized units (the instance is rescaled
// to the unit square first); the scale factor is echoed in the config block.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qtsp
