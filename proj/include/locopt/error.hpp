#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locopt {

// Base of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (out-of-range id, infeasible
// solution, malformed instance).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An exponential routine was asked to run beyond its default size limit
// without the caller opting in.
class GuardrailExceeded : public Error {
 public:
  using Error::Error;
};

// Text input could not be parsed. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline void require(bool condition, const char* message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace locopt
