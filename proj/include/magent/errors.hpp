#pragma once

#include <stdexcept>
#include <string>

namespace magent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An eigen-solve or factorization produced an untrustworthy result.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// The Lyapunov system is (numerically) singular.
class NearSingular : public Error {
 public:
  using Error::Error;
};

/// Covariance matrix violates the uncertainty principle.
class InvalidState : public Error {
 public:
  using Error::Error;
};

class NoEntanglement : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace magent
