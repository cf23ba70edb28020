#pragma once

#include <stdexcept>
#include <string>

namespace fsind {

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input rejected: malformed data, violated precondition, bad argument.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// An enumeration or search exceeded its configured budget.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// A self-check failed. Always indicates a bug, never bad input.
class InternalError : public Error {
public:
  using Error::Error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidInput(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

} // namespace fsind
