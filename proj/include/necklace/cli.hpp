#pragma once

#include <iosfwd>

namespace necklace::cli {

/// Parses argv and runs one subcommand, writing to the given streams.
/// Returns 0 on success, 1 when a verification or integrity check fails,
/// 2 on usage errors (unknown flags, malformed words, n out of range).
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace necklace::cli
