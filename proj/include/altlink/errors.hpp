#pragma once

#include <stdexcept>
#include <string>

namespace altlink {

/// Bad user-facing input (malformed PD text, out-of-range parameters).
/// Maps to CLI exit code 1.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// PD-code specific input error; message carries the 1-based token position.
struct ParseError : InputError {
    explicit ParseError(const std::string& msg) : InputError(msg) {}
};

/// A library invariant tripped; indicates a bug, not bad input.
/// Maps to CLI exit code 2.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace altlink
