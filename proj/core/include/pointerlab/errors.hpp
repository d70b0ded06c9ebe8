#pragma once

#include <stdexcept>
#include <string>

namespace pointerlab {

/// Base class of everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument value is outside the operation's documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Inputs are individually legal but jointly violate a stated precondition
/// (e.g. a Gaussian whose support exceeds what the grid can resolve).
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// The input is an exact degeneracy for which the operation has no answer.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// Experiment configuration failed validation; message names the parameter.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failure while emitting results.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Output file exists and --force was not given.
class OverwriteRefused : public IoError {
 public:
  using IoError::IoError;
};

}  // namespace pointerlab
