#pragma once

#include <string>

#include "qosc/ppoly.hpp"

namespace qosc {

// Rational function num/den in p (q = p^4): the scalar field of the library.
//
// Canonical form: gcd(num, den) is a unit, den is a polynomial with nonzero
// constant term and leading coefficient 1. Equality of canonical forms is
// equality of rational functions.
class PRational {
 public:
  PRational() : den_(1) {}
  PRational(const BigRational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  PRational(long c) : PRational(BigRational(c)) {}       // NOLINT(google-explicit-constructor)
  PRational(int c) : PRational(BigRational(c)) {}        // NOLINT(google-explicit-constructor)
  PRational(PPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  PRational(PPoly num, PPoly den);

  // q^{quarters/4}
  static PRational q_power_quarters(int quarters) { return PPoly::q_power_quarters(quarters); }
  static PRational q_power(int k) { return PPoly::q_power(k); }

  const PPoly& num() const { return num_; }
  const PPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  PRational inverse() const;
  PRational pow(int e) const;

  PRational operator-() const;
  PRational& operator+=(const PRational& o);
  PRational& operator-=(const PRational& o);
  PRational& operator*=(const PRational& o);
  PRational& operator/=(const PRational& o);

  friend PRational operator+(PRational a, const PRational& b) { return a += b; }
  friend PRational operator-(PRational a, const PRational& b) { return a -= b; }
  friend PRational operator*(PRational a, const PRational& b) { return a *= b; }
  friend PRational operator/(PRational a, const PRational& b) { return a /= b; }
  friend bool operator==(const PRational& a, const PRational& b) = default;

  // "1+q", "-q^(1/2)", "(1)/(1-q)".
  std::string str() const;
  // True when str() is a single signed token that needs no parentheses.
  bool is_atomic() const;

 private:
  struct Canonical {};
  PRational(PPoly num, PPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  PPoly num_;
  PPoly den_;
};

// Cross-multiplication equality; agrees with == on canonical values.
bool cross_equal(const PRational& a, const PRational& b);

long double evaluate(const PRational& f, long double p);

}  // namespace qosc
