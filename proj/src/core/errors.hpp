#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vprdf {

// Positioned syntax error. Line and column are 1-based; column 0 means the
// position is not meaningful (e.g. document-level errors).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column)
      : std::runtime_error(format(message, line, column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    std::string out = "parse error";
    if (line > 0) {
      out += " at line " + std::to_string(line);
      if (column > 0) out += ", column " + std::to_string(column);
    }
    out += ": " + message;
    return out;
  }

  std::size_t line_;
  std::size_t column_;
};

// Semantic invariant violation in otherwise well-formed input.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& message)
      : std::runtime_error("validation error: " + message) {}
};

}  // namespace vprdf
