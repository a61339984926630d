#pragma once

#include <stdexcept>
#include <string>

namespace braidex {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user-facing input (malformed fraction, unknown flag, missing file).
struct InputError : Error {
    using Error::Error;
};

// The skein evaluation was asked to expand a diagram above the configured
// crossing cap. Callers may retry with a larger cap.
struct CapExceeded : Error {
    using Error::Error;
};

// An internal consistency check failed. This signals a bug in a builder or
// in bookkeeping, never bad input.
struct CheckError : Error {
    using Error::Error;
};

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw CheckError(msg);
}

}  // namespace braidex
