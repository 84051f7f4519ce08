#pragma once

#include <stdexcept>
#include <string>

namespace chf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested function does not exist for these parameters
/// (M with b a non-positive integer, M~ with b an integer >= 2).
class UndefinedFunction : public Error {
 public:
  using Error::Error;
};

/// Argument outside the supported domain (z <= 0 where a branch cut applies,
/// violated preconditions on integer parameters).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Pole of gamma/digamma requested as a value.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Series or extrapolation failed to reach the requested tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

}  // namespace chf
