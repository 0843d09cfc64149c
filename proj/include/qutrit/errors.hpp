#pragma once

#include <stdexcept>
#include <string>

namespace qutrit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroVector : public Error {
 public:
  ZeroVector() : Error("cannot normalize a zero vector") {}
};

class DegeneratePair : public Error {
 public:
  using Error::Error;
};

/// Raised by stereographic() for the south pole, which maps to infinity.
class SouthPole : public Error {
 public:
  SouthPole() : Error("south pole has no finite stereographic image") {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class InvalidTransition : public Error {
 public:
  using Error::Error;
};

class CrushInSequence : public Error {
 public:
  CrushInSequence()
      : Error("sequence contains a gradient crush and is not unitary") {}
};

class InconsistentReadouts : public Error {
 public:
  using Error::Error;
};

/// Text-format errors. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    std::string out = "parse error";
    if (line > 0) out += " at line " + std::to_string(line);
    if (column > 0) out += (line > 0 ? ", column " : " at column ") +
                           std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace qutrit
