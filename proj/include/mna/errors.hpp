#pragma once

#include <stdexcept>
#include <string>

namespace mna {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// q is even, below 3, or not a prime power.
class NotOddPrimePower : public Error {
 public:
  using Error::Error;
};

/// A size guard was exceeded (field ceiling, per-method limits).
class TooLarge : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class NotInSigma : public Error {
 public:
  using Error::Error;
};

class NotInS : public Error {
 public:
  using Error::Error;
};

/// The (x, y) pair lies on the exceptional locus where y = x - 1 and
/// x^2 - x - 1 = 0 (or the mirrored locus); the character tables do not
/// describe class membership there.
class ExceptionalPair : public Error {
 public:
  using Error::Error;
};

class BadSliceParam : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

}  // namespace mna
