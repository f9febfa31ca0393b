#pragma once

#include <stdexcept>
#include <string>

namespace cg {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand lengths or matrix shapes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a documented precondition (a == b, v == 0, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A search over a finite space ended without a hit.
class NotFound : public Error {
 public:
  using Error::Error;
};

/// Linear system has no solution.
class NoSolution : public Error {
 public:
  using Error::Error;
};

/// Two quadratic forms have different Arf type.
class InequivalentForms : public Error {
 public:
  using Error::Error;
};

/// Input is beyond what the exhaustive algorithm is meant to handle.
class ScaleError : public Error {
 public:
  using Error::Error;
};

/// Elementary move is not well defined (design not supersimple).
class IllDefinedMove : public Error {
 public:
  using Error::Error;
};

/// Two 3-subsets lie in different orbits.
class NoMap : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cg
