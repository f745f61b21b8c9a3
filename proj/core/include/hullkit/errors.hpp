#pragma once

#include <stdexcept>
#include <string>

namespace hullkit {

/// Malformed input text. Carries a 1-based source location when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line = 0, int column = 0)
      : std::runtime_error(format(msg, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& msg, int line, int column) {
    if (line <= 0) return msg;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
  }
  int line_;
  int column_;
};

/// The input parsed, but is not a Lie algebra (antisymmetry / Jacobi) or
/// otherwise violates a structural axiom.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (non-solvable input, odd
/// dimension for a symplectic check, group enumeration over its bound, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hullkit
