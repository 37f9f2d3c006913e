#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace musym {

/// @brief Malformed user input (file, token, or config), with an optional
/// 1-based source location. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& message)
      : std::runtime_error(message) {}
  InputError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

/// @brief Request for a triad outside the 24-element major/minor world
/// (e.g. a diminished scale degree).
class NotATriadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace musym
