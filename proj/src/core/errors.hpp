#pragma once

#include <stdexcept>
#include <string>

namespace banmf {

// Base class for all library errors. Subclasses exist so the C API can map
// failures onto stable status codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Incompatible matrix shapes. The message names both shapes.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Invalid parameter value (rank < 1, density outside (0,1), npoint < 2, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Input matrix has no 1-entries where the operation requires support.
class EmptySupportError : public Error {
public:
    using Error::Error;
};

// A search-space or retry budget was exceeded.
class BudgetError : public Error {
public:
    using Error::Error;
};

// Malformed CSV input. Carries the 1-based (line, column-token) location.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(msg), line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// File could not be opened for reading or writing.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace banmf
