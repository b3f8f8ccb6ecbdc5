#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eternal {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (graph6, edge lists, family specs).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A precondition on the arguments does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Input is valid but beyond what the exact solvers accept, or a time budget ran out.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace eternal
