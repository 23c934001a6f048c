#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpi {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Group table fails a group axiom.
class GroupError : public Error {
 public:
  using Error::Error;
};

/// Tuple does not define an admissible elementary grading.
class InvalidGrading : public Error {
 public:
  using Error::Error;
};

/// A variable refers to an element or matrix position the grading cannot realize.
class InvalidVariable : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A property the mathematics guarantees was observed to fail.
class InvariantFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Malformed configuration file; line and column are 1-based, 0 when unknown.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line ? what + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"
                   : what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace gpi
