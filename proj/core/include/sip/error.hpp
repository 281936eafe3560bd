#pragma once

#include <stdexcept>
#include <string>

namespace sip {

// Precondition violated by the caller (bad conductor, non-prime p, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed a configured size or branch bound.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An object is not in a state that supports the requested operation
// (missing power map, missing per-order solutions, ...).
class InvalidState : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The constraint system handed to an engine does not bound its variables.
class Unbounded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text input that does not conform to a grammar. Line and column are 1-based;
// zero means "not applicable".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }
  int line_;
  int column_;
};

}  // namespace sip
