#pragma once

#include <stdexcept>
#include <string>

namespace mapfold {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text or file.
struct ParseError : Error {
  explicit ParseError(const std::string& what, std::size_t token = 0)
      : Error(what), token_index(token) {}
  std::size_t token_index;  // 1-based position of the offending token, 0 if n/a
};

// Integer overflow in exact arithmetic. Never silently wraps.
struct OverflowError : Error {
  explicit OverflowError(const std::string& what) : Error(what) {}
};

// A caller violated a documented precondition.
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// An operation refused to run because a configured resource bound
// (crease count, state count) would be exceeded.
struct BoundExceeded : Error {
  explicit BoundExceeded(const std::string& what) : Error(what) {}
};

}  // namespace mapfold
