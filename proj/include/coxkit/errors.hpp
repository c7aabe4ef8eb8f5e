#pragma once

#include <stdexcept>
#include <string>

namespace coxkit {

// Bad input from a caller or a data file: wrong modulus, malformed word,
// invalid automorphism, precondition violation detectable up front.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure in .cox / .act / .rows files. line == 0 means "no line info".
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what : what),
        line(line_) {}
};

// Operation requires a finite-type (sub)system and got an infinite one.
struct NonFiniteTypeError : DomainError {
  explicit NonFiniteTypeError(const std::string& what) : DomainError(what) {}
};

// A mandatory cross-check between two independent computations disagreed.
// This is a bug trap, never a recoverable condition.
struct InternalCheckError : std::logic_error {
  explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace coxkit
