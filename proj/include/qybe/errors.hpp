#pragma once

#include <stdexcept>
#include <string>

namespace qybe {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Syntax error in a scalar expression; `position` is a 0-based offset into
/// the input text.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Matrix shape mismatch (multiplication, braid products, JSON input, ...).
struct ShapeError : Error {
    using Error::Error;
};

/// Division by the zero scalar or inversion of a singular matrix.
struct SingularError : Error {
    using Error::Error;
};

/// Evaluation of a rational function at a zero of its denominator.
struct PoleError : Error {
    using Error::Error;
};

/// Input violates a documented precondition (zero weight, duplicate
/// generator, non-idempotent projector, ...).
struct DomainError : Error {
    using Error::Error;
};

}  // namespace qybe
