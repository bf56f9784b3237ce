#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace inducibility {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph6 text. `offset` is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Caller-supplied data violates an operation's precondition
// (non-edge in a tuple, pattern with an isolated vertex, bad cover, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// A parameter outside the range where a bound or construction applies.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A search or construction would exceed a configured resource ceiling.
class ResourceCeiling : public Error {
 public:
  using Error::Error;
};

// An inequality that must hold on every graph was observed to fail.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

// Internal consistency check failed; indicates a bug in this library.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace inducibility
