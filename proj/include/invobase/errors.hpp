#ifndef INVOBASE_ERRORS_HPP
#define INVOBASE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace invobase {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different variable counts.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A precondition on the values was violated (zero polynomial where a
/// nonzero one is required, monomial not a member of the reference set, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// A table-backed division was queried outside its domain or used where a
/// continuous division is required.
class FixtureError : public Error {
public:
    using Error::Error;
};

/// Text could not be parsed; carries a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column)
        : Error(message), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace invobase

#endif
