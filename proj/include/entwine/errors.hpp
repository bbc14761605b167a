#pragma once

#include <stdexcept>
#include <string>

namespace entwine {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or shape-inconsistent input (maps to CLI exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Input is well-formed but violates a mathematical precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The canonical map of a (co)extension is not bijective.
class GaloisError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An identity that must hold by construction failed. Signals a bug or a
/// caller-supplied object that does not have the required structure.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented preconditions.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace entwine
