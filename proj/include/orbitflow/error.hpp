#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbitflow {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line number (0 when the
/// error is not tied to a line, e.g. empty input).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A precondition on arguments was violated (bad policy, mismatched sizes...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace orbitflow
