#pragma once

#include <stdexcept>
#include <string>

namespace noeth {

/// Violated precondition of an algebraic operation (CLI exit status 1).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Ill-formed problem text; carries the 1-based source location (exit status 2).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line), column_(column), message_(message) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

private:
  int line_;
  int column_;
  std::string message_;
};

}  // namespace noeth
