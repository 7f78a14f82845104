#pragma once

#include <iosfwd>

namespace altlink::cli {

/// Entry point of the `altlink` tool, separated from main() so tests can
/// drive it with captured streams. Returns the process exit code:
/// 0 success, 1 invalid input or usage, 2 internal invariant failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace altlink::cli
