#pragma once

#include <stdexcept>
#include <string>

namespace asymcoh {

/// Base of every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
};

class OddDimension : public Error {
 public:
  OddDimension() : Error("Pfaffian requested for an odd-dimensional matrix") {}
};

class UnsupportedType : public Error {
 public:
  using Error::Error;
};

class NotDominant : public Error {
 public:
  using Error::Error;
};

class NotPseudoEffective : public Error {
 public:
  using Error::Error;
};

class IllConditionedModel : public Error {
 public:
  using Error::Error;
};

class NotBig : public Error {
 public:
  using Error::Error;
};

class UnsupportedConeMode : public Error {
 public:
  using Error::Error;
};

class ModelValidationError : public Error {
 public:
  using Error::Error;
};

class EmptySequence : public Error {
 public:
  EmptySequence() : Error("sequence is empty") {}
};

class HypothesisNotVerified : public Error {
 public:
  using Error::Error;
};

}  // namespace asymcoh
