#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace attrcalc {

// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An attribute or universe definition violates its own invariants.
class SchemaError : public Error {
public:
    using Error::Error;
};

// A well-formed input does not fit the universe it is used with: unknown
// attribute, value outside the declared range, wrong tuple arity.
class SchemaMismatchError : public Error {
public:
    using Error::Error;
};

// Rejected textual input. Line and column are 1-based; what() is prefixed
// with "line:column: ".
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A document cannot be written in the requested form.
class SerializeError : public Error {
public:
    using Error::Error;
};

} // namespace attrcalc
