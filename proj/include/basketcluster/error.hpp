#pragma once

#include <stdexcept>
#include <string>

namespace bcl {

// Base class for every recoverable failure raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad caller input: dimension mismatches, out-of-range labels, invalid
// configuration values.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// File could not be read, written, or parsed.
class IoError : public Error {
 public:
  using Error::Error;
};

// An enumeration-bounded operation would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace bcl
