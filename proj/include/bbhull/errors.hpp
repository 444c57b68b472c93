#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bbhull {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Division by zero and malformed rationals.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// Operands whose sizes do not fit together (non-square determinant, vector
/// length against ambient dimension, ...).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Geometric preconditions that fail on the given data: affinely dependent
/// points where independence is required, a point on a hyperplane where an
/// orientation is needed, a lower-dimensional set where full dimension is
/// required.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// Invalid generator parameters and similar caller mistakes.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Text input that does not follow the POLY grammar.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace bbhull
