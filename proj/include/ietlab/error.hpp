#pragma once

#include <stdexcept>
#include <string>

namespace ietlab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid field specification or field-level arithmetic failure
/// (reducible modulus, division by zero, mixed fields, ...).
class FieldError : public Error {
public:
    using Error::Error;
};

/// Invalid interval exchange data (non-bijective images, bad cuts, ...).
class IetError : public Error {
public:
    using Error::Error;
};

/// Violated constraint on user-supplied parameters (independence,
/// interval bounds, unknown generator names, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// Text input could not be parsed; carries the source position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int col)
        : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int column() const { return col_; }

private:
    int line_;
    int col_;
};

}  // namespace ietlab
