#pragma once

#include <stdexcept>
#include <string>

namespace twistbench {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax or semantic error in a textual input, with a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) +
              ": " + msg),
        line(line),
        col(col) {}

  int line;
  int col;
};

}  // namespace twistbench
