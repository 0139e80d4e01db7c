#pragma once

#include <gmpxx.h>

#include <string>

namespace qosc {

using BigInt = mpz_class;

// Arbitrary precision rational; GMP keeps it canonical (gcd 1, positive
// denominator, zero is 0/1) after every operation.
using BigRational = mpq_class;

inline bool is_integral(const BigRational& r) { return r.get_den() == 1; }

std::string to_string(const BigRational& r);

}  // namespace qosc
