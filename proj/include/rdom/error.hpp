#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rdom {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed graph input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A precondition on the input failed; the message carries a witness.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Oracle refused an instance above its size limit.
class OracleLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace rdom
