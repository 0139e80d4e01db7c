#pragma once

#include <complex>

#include "qosc/multi_poly.hpp"
#include "qosc/ppoly.hpp"
#include "qosc/prational.hpp"

namespace qosc {

// Floating-point images of exact objects at p = q_val^{1/4}, q_val in (0, 1).
// Internally evaluated in long double.

double substitute_numeric(const PPoly& f, double q_val);
double substitute_numeric(const PRational& f, double q_val);

// Complex z; the formal parameter a (when present) takes the value a_val.
std::complex<double> substitute_numeric(const ZLaurent& f, double q_val, std::complex<double> z_val,
                                        double a_val = 0.0);

// Real x = cos(theta) for a z <-> 1/z symmetric element, through the
// Chebyshev recurrence for z^k + z^-k = 2 T_k(x). Throws AsymmetricElement.
double substitute_numeric_real_x(const ZLaurent& f, double q_val, double x_val, double a_val = 0.0);

double substitute_numeric(const XAPoly& f, double q_val, double x_val, double a_val = 0.0);

}  // namespace qosc
