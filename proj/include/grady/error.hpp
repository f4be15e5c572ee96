#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grady {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position` is the 0-based offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A job document does not match the expected shape. `path` names the field.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& message)
      : Error("schema error at " + path + ": " + message), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Operands live in different polynomial rings.
class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different polynomial rings") {}
};

/// A precondition on the mathematical input was violated (zero divisor, unit ideal, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The input lies outside the ideal classes the library can decompose or verify.
class UnsupportedClass : public Error {
 public:
  using Error::Error;
};

}  // namespace grady
