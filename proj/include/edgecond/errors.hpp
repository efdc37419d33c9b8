#pragma once

#include <stdexcept>
#include <string>

namespace edgecond {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class InvalidMinorSpec : public Error {
 public:
  using Error::Error;
};

/// A distance formula was evaluated outside the range of arccos/arccosh.
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// A vertex submatrix has none of the Proper/Ideal/Outer signatures.
class AmbiguousSignature : public Error {
 public:
  using Error::Error;
};

/// The realization class has no edge-condition system to solve
/// (spherical, ideal or excluded symmetric case).
class InvalidClass : public Error {
 public:
  using Error::Error;
};

class NoContraction : public Error {
 public:
  using Error::Error;
};

}  // namespace edgecond
