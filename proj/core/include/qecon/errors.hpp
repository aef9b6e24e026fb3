#pragma once

#include <stdexcept>
#include <string>

namespace qecon {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input data: scenario files, factor designs, constraints, or
/// out-of-domain parameters. The CLI maps this to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a scenario file, with a source location.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& message, int line, int column)
      : ValidationError("line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Numeric failures during evaluation, e.g. an undefined ROI when
/// direct + future costs are zero. The CLI maps this to exit code 1.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace qecon
