#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qosc/big_rational.hpp"

namespace qosc {

// Laurent polynomial in the base variable p, with q = p^4.
//
// Every quarter-integer power of q used by the library is an integer power of
// p, so q^{k/4} is stored as p^k. Terms are kept sorted by ascending exponent
// with no zero coefficients.
class PPoly {
 public:
  struct Term {
    int exp;
    BigRational coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  PPoly() = default;
  PPoly(const BigRational& c);  // NOLINT(google-explicit-constructor)
  PPoly(long c) : PPoly(BigRational(c)) {}  // NOLINT(google-explicit-constructor)
  PPoly(int c) : PPoly(BigRational(c)) {}  // NOLINT(google-explicit-constructor)

  static PPoly monomial(const BigRational& c, int exp);
  // p^exp
  static PPoly p_power(int exp) { return monomial(1, exp); }
  // q^quarters/4, i.e. p^quarters
  static PPoly q_power_quarters(int quarters) { return monomial(1, quarters); }
  // q^k for integer k
  static PPoly q_power(int k) { return monomial(1, 4 * k); }
  static PPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  bool is_integral() const;

  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Both undefined on the zero polynomial.
  int min_exponent() const { return terms_.front().exp; }
  int max_exponent() const { return terms_.back().exp; }
  const BigRational& leading_coeff() const { return terms_.back().coeff; }
  const BigRational& trailing_coeff() const { return terms_.front().coeff; }

  BigRational coeff(int exp) const;
  BigRational constant_term() const { return coeff(0); }

  // gcd of exponent differences; 0 for monomials and zero.
  int stride() const;

  // Multiply by p^k.
  PPoly shifted(int k) const;
  PPoly scaled(const BigRational& c) const;
  // p -> p^k (k may be negative).
  PPoly inflated(int k) const;
  // Sum of coefficients (the value at p = 1).
  BigRational value_at_one() const;

  PPoly pow(unsigned e) const;

  PPoly operator-() const;
  PPoly& operator+=(const PPoly& o);
  PPoly& operator-=(const PPoly& o);
  PPoly& operator*=(const PPoly& o);

  friend PPoly operator+(PPoly a, const PPoly& b) { return a += b; }
  friend PPoly operator-(PPoly a, const PPoly& b) { return a -= b; }
  friend PPoly operator*(const PPoly& a, const PPoly& b);
  friend bool operator==(const PPoly& a, const PPoly& b) = default;

  // Rendered in q, e.g. "1+q^(1/2)-2*q^3".
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

// Exact Laurent quotient num/den; throws NotDivisible when none exists.
PPoly divide_exact(const PPoly& num, const PPoly& den);
std::optional<PPoly> try_divide_exact(const PPoly& num, const PPoly& den);

// Greatest common divisor, ignoring monomial (unit) factors. The result is a
// genuine polynomial with nonzero constant term and leading coefficient 1.
// gcd(0, 0) = 0.
PPoly gcd(const PPoly& a, const PPoly& b);

long double evaluate(const PPoly& f, long double p);

}  // namespace qosc
