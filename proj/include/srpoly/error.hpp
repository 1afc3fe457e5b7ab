#ifndef SRPOLY_ERROR_HPP
#define SRPOLY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace srpoly {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the domain of the operation (zero constant term,
/// non-monic input, composite characteristic, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Operands live in different fields.
class FieldMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A configured size budget (degree ceiling, integer range) would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A result that the underlying mathematics guarantees did not materialise.
/// Seeing one of these means either a bug or a falsified identity.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace srpoly

#endif  // SRPOLY_ERROR_HPP
