#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcq {

/// Raised by the edge-list readers. Carries the 1-based line number of the
/// offending input line (0 when the failure is not tied to a line, e.g. I/O).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A file could not be opened or read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gcq
