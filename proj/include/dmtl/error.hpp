#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dmtl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid arithmetic on extended rationals, e.g. `inf - inf`.
class ArithmeticError : public Error {
  public:
    using Error::Error;
};

/// Malformed or semantically invalid input (bad interval, wrong predicate
/// kind, unsupported unit mix, ...).
class InputError : public Error {
  public:
    using Error::Error;
};

/// Syntax error with a 1-based source location.
class ParseError : public InputError {
  public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

/// The program uses a construct the requested operation cannot evaluate
/// (e.g. a since-rule handed to the forward-propagating reasoner).
class FragmentError : public Error {
  public:
    using Error::Error;
};

/// A configurable resource cap (cycles, windows, fixpoint rounds) was hit.
class CapExceeded : public Error {
  public:
    using Error::Error;
};

}  // namespace dmtl
