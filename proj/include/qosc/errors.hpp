#pragma once

#include <stdexcept>
#include <string>

namespace qosc {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No exact quotient exists for a polynomial division.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

// Series reciprocal requested for a series whose constant term is not invertible.
class ZeroConstantTerm : public Error {
 public:
  using Error::Error;
};

// Real-x substitution requested for an element that is not z <-> 1/z symmetric.
class AsymmetricElement : public Error {
 public:
  using Error::Error;
};

// A lower parameter b of a basic hypergeometric series has (b;q)_k = 0 in range.
class LowerParameterPole : public Error {
 public:
  using Error::Error;
};

// The truncated-representation oracle was asked for an entry its window cannot
// compute exactly.
class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

class NumericOverflow : public Error {
 public:
  using Error::Error;
};

// Arithmetic between truncated series of different orders.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

}  // namespace qosc
