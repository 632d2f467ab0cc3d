#ifndef CRN_ERRORS_HPP
#define CRN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crn {

/// Base of every error raised by the library. `code()` is a stable
/// machine-readable identifier (e.g. "SelfLoopReaction").
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string code, const std::string& message, std::size_t line,
             std::size_t column)
      : Error(std::move(code), format(message, line, column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace crn

#endif  // CRN_ERRORS_HPP
