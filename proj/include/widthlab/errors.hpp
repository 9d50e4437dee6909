#pragma once

#include <stdexcept>
#include <string>

namespace widthlab {

// Thrown when an exact solver is asked for an instance above its configured
// size cap. The CLI maps this to exit code 3.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure with position information. The CLI maps this to exit code 2.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& message, int line, int column)
      : std::runtime_error(message + " (line " + std::to_string(line) +
                           ", byte " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace widthlab
