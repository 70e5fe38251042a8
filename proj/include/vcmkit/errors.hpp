#pragma once

#include <stdexcept>
#include <string>

namespace vcmkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex, face or document does not fit the ambient shape.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An operation was asked about a face the complex does not contain.
class NotAFace : public Error {
 public:
  using Error::Error;
};

/// The complex fails a structural precondition (purity, balancedness, ...).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// The Stanley-Reisner complex of the unit ideal does not exist.
class UnitIdeal : public Error {
 public:
  using Error::Error;
};

/// codim is undefined when the projective variety is empty.
class EmptyVariety : public Error {
 public:
  using Error::Error;
};

/// A configured size or iteration bound was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Matrix dimensions do not chain.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace vcmkit
