#pragma once

#include <iosfwd>

namespace sfmlab::cli {

// Parses argv, runs one subcommand and writes its report to `out` (or to
// --out). Returns 0 on success, 1 when a checked property fails and 2 on a
// usage error, after printing a one-line diagnostic to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sfmlab::cli
