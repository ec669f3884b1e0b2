#pragma once

#include <stdexcept>
#include <string>

namespace subkdom {

// Base type for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid argument values: bad k, out-of-range vertex, bad family parameters.
struct DomainError : Error {
    using Error::Error;
};

// Unparseable input text. `position` is a 0-based byte offset (graph6) or a
// 1-based line number (edge lists); -1 when unknown.
struct MalformedInputError : Error {
    explicit MalformedInputError(const std::string& what, long pos = -1)
        : Error(what), position(pos) {}
    long position;
};

// A bound's hypothesis does not hold for the requested input.
struct PreconditionError : Error {
    using Error::Error;
};

// Input exceeds a configured resource cap. Exceeding a cap is a hard error,
// never a silent approximation.
struct ResourceLimitError : Error {
    using Error::Error;
};

}  // namespace subkdom
