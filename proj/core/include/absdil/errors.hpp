#pragma once

#include <stdexcept>
#include <string>

namespace absdil {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain (non-abelian group where abelian is
/// required, non-PSD matrix, unsupported group spec, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Exact coefficients grew past the configured bit budget, or a
/// materialized state space exceeds its cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Two evaluation routes that must agree did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace absdil
