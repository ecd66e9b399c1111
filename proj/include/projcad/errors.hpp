#pragma once

#include <stdexcept>
#include <string>

namespace projcad {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InexactDivision : public Error {
public:
    InexactDivision() : Error("inexact division") {}
};

/// A precondition on the arguments of an operation was violated.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Raised in strict mode when a positive-dimensional cell nullifies a
/// projection polynomial.
class NotWellOriented : public Error {
public:
    using Error::Error;
};

/// The computed decomposition failed an internal consistency check.
class IntegrityError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace projcad
