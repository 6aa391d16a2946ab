#pragma once

#include <stdexcept>
#include <string>

namespace hsk {

// Base of all library errors. The C API maps each subclass to a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition failed (vanishing denominator, label outside
// the admissible set, strand mismatch, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The request exceeds a configured size limit (strand count of a Gram matrix).
class LimitError : public Error {
 public:
  using Error::Error;
};

// Malformed request: bad JSON, bad argument value.
class UsageError : public Error {
 public:
  using Error::Error;
};

// A self-check inside the library failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hsk
