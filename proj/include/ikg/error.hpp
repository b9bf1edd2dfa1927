#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ikg {

// Base class for every failure the library reports by exception.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6, poset files, representation files).
class DecodeError : public Error {
 public:
  DecodeError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A state that a proof in the underlying theory rules out was reached.
// Raised instead of silently repairing, so sweeps surface it.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ikg
