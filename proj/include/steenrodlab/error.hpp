#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace steenrodlab {

// Machine-readable error category; the CLI maps these onto exit codes and
// the "code" field of its JSON error payload.
enum class ErrorCode {
  DivisionByZero,
  Shape,
  Parameter,
  InvalidPrime,
  Domain,
  Degree,
  Parse,
  Budget,
  Certification,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(ErrorCode::Parse, msg + " at line " + std::to_string(line) + ", column " +
                                    std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace steenrodlab
