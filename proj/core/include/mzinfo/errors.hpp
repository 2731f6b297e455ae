#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mzinfo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A mode state that is not unit-normalized.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// Data cannot determine the requested parameter (e.g. a single path difference).
class NonIdentifiableError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. `line()` is 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mzinfo
