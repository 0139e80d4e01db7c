#pragma once

#include "qosc/multi_poly.hpp"

namespace qosc {

inline ZLaurent z_power(int k) { return ZLaurent::monomial({k, 0}); }
inline ZLaurent a_power(int j) { return ZLaurent::monomial({0, j}); }

// coeff(k, j) == coeff(-k, j) for every term.
bool is_symmetric(const ZLaurent& f);

// z -> 1/z.
ZLaurent z_reflect(const ZLaurent& f);

// f(z) -> f(q^{quarters/4} z): z^k picks up p^{quarters*k}. T_z is quarters = 4,
// T_z^{1/2} is quarters = 2.
ZLaurent z_dilate(const ZLaurent& f, int quarters);

// Exact quotient with the library's error contract (NotDivisible).
inline ZLaurent laurent_divide_exact(const ZLaurent& num, const ZLaurent& den) { return divide_exact(num, den); }

// a^j -> factor^j a^j.
inline ZLaurent substitute_a(const ZLaurent& f, const PRational& factor) { return scale_variable(f, 1, factor); }

// a -> 0.
ZLaurent drop_a(const ZLaurent& f);

// Coefficient of z^k a^j, as a PRational.
inline PRational coeff(const ZLaurent& f, int k, int j = 0) { return f.coeff({k, j}); }

// Symmetric Laurent element rewritten as a polynomial in x = (z + 1/z)/2
// (and a), through z^k + z^-k = 2 T_k(x). Throws AsymmetricElement.
XAPoly to_x_polynomial(const ZLaurent& f);

}  // namespace qosc
