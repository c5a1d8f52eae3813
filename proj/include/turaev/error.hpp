#pragma once

#include <stdexcept>
#include <string>

namespace turaev {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Linear algebra
class DimensionError : public Error {
 public:
  using Error::Error;
};
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// Group construction
class NotAssociativeError : public Error {
 public:
  using Error::Error;
};
class NoIdentityError : public Error {
 public:
  using Error::Error;
};
class NoInverseError : public Error {
 public:
  using Error::Error;
};

// Algebra / bundle
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};
class NotFrobeniusError : public Error {
 public:
  using Error::Error;
};
class BadCharacteristicError : public Error {
 public:
  using Error::Error;
};
class CocycleViolationError : public Error {
 public:
  using Error::Error;
};
class NonInvariantVolumeError : public Error {
 public:
  using Error::Error;
};
class NonInvertibleBetaError : public Error {
 public:
  using Error::Error;
};
class SingularProjectiveMatrixError : public Error {
 public:
  using Error::Error;
};

// Characters
class DomainError : public Error {
 public:
  using Error::Error;
};

// I/O
class ParseError : public Error {
 public:
  using Error::Error;
};
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace turaev
