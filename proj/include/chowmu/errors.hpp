#pragma once

#include <stdexcept>
#include <string>

namespace chowmu {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFullRank : public Error {
 public:
  using Error::Error;
};

class ExchangeViolation : public Error {
 public:
  using Error::Error;
};

class EmptyBases : public Error {
 public:
  using Error::Error;
};

/// An element lies in no basis where the operation needs a loopless matroid.
class LoopPresent : public Error {
 public:
  using Error::Error;
};

class LoopContract : public Error {
 public:
  using Error::Error;
};

class KOutOfRange : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// A generic sample point hit a chamber wall.
class DegeneratePoint : public Error {
 public:
  using Error::Error;
};

/// A translated intersection was not transversal.
class DegenerateSystem : public Error {
 public:
  using Error::Error;
};

class Unbalanced : public Error {
 public:
  using Error::Error;
};

/// Two computations that must agree did not.
class CrossCheckFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace chowmu
