#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zdiv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A ring, graph, or fragment is larger than the configured exhaustive-search limit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `offset` is the 0-based character position of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace zdiv
