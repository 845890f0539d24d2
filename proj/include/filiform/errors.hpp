#pragma once

#include <stdexcept>
#include <string>

namespace filiform {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class BadDimension : public Error {
 public:
  using Error::Error;
};

class SingularTransform : public Error {
 public:
  using Error::Error;
};

/// Raised when a transformed table does not fit the TLeib template. The
/// isomorphism criteria guarantee closure of the family, so this always
/// indicates a bug.
class TemplateMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateStratum : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  using Error::Error;
};

class DimensionUnsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace filiform
