#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relcalc {

// Base of everything the library reports to callers. Operations never abort;
// contract violations surface as one of these.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Domain/codomain or multiplicity mismatch.
class TypeError : public Error {
 public:
  using Error::Error;
};

// Argument outside the operation's domain (e.g. function_of on a relation
// that is not a graph).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("syntax error at " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace relcalc
