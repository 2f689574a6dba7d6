#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chib {

/// Argument outside an operation's documented domain.
class InvalidParameter : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed graph file. `line` is 1-based; `column` is a 1-based byte
/// offset within that line (0 when the error concerns the whole line).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)), line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  static std::string format(const std::string &what, std::size_t line,
                            std::size_t column) {
    std::string s = "line " + std::to_string(line);
    if (column) s += ", byte " + std::to_string(column);
    return s + ": " + what;
  }
  std::size_t line_;
  std::size_t column_;
};

/// An exact solve ran out of nodes or wall time before reaching a verdict.
class BudgetExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace chib
