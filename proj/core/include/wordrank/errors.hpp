#pragma once

#include <stdexcept>
#include <string>

namespace wordrank {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two inputs that must agree in length or dimension do not.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A token count does not fit into 64 bits.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// The one-token-per-word guarantee cannot be met (N < c).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Too few time steps or data points for the requested statistic.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// A rank column is not a permutation, or similar structural corruption.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// The regression design matrix is singular (all x equal).
class SingularDesignError : public Error {
 public:
  using Error::Error;
};

/// A fit was requested on data that carries no information (e.g. zero turnover).
class FitUndefinedError : public Error {
 public:
  using Error::Error;
};

/// Bad configuration: unreadable word lists, malformed config files, bad flags.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace wordrank
