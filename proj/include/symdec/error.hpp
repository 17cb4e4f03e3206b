#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symdec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Malformed polynomial / sequence text. `position()` is a byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// The defining ideal contains a unit, so the quotient is the zero ring.
class ZeroAlgebra : public Error {
public:
    using Error::Error;
};

/// The quotient did not become finite-dimensional below the truncation cap.
class NotArtinian : public Error {
public:
    using Error::Error;
};

class NotGorenstein : public Error {
public:
    using Error::Error;
};

/// A mathematical invariant that must always hold was violated.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace symdec
