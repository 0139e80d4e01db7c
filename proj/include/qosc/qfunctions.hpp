#pragma once

#include <string>
#include <string_view>

#include "qosc/hypergeometric.hpp"
#include "qosc/truncated_series.hpp"
#include "qosc/zlaurent.hpp"

namespace qosc {

// A deformation exponent mu = quarters/4.
struct QuarterExponent {
  int quarters = 0;

  // Accepts exactly "0", "1/4", "1/2", "3/4".
  static QuarterExponent parse(std::string_view s);
  std::string str() const;

  friend bool operator==(QuarterExponent, QuarterExponent) = default;
  friend auto operator<=>(QuarterExponent, QuarterExponent) = default;
};

// (q^{quarters/4}; q)_n as a Laurent polynomial in p.
PPoly q_pochhammer_power(int quarters, int n);
// (q;q)_n
inline PPoly q_factorial(int n) { return q_pochhammer_power(4, n); }

// Gaussian binomial (q;q)_n / ((q;q)_k (q;q)_{n-k}); 0 for k outside [0, n].
PPoly q_binomial(int n, int k);

// E_q^{(mu)}(c t) = sum_{n<=order} q^{mu n^2} c^n t^n / (q;q)_n.
ZSeries q_exponential(QuarterExponent mu, const ZLaurent& coefficient, int order);

// (c t; q)_inf through t^order, from the functional equation
// f(t) = (1 - c t) f(q t), f(0) = 1.
ZSeries infinite_q_pochhammer(const ZLaurent& coefficient, int order);

// Ismail-Zhang exponential as a series in b:
//   sum_n q^{n^2/4}/(q;q)_n (a q^{(1-n)/2} z; q)_n (a q^{(1-n)/2}/z; q)_n b^n.
ZSeries curly_E_q(const ZLaurent& a_param, int order);

// Continuous q-Hermite H_n(x|q) = sum_k [n k]_q z^{n-2k}.
ZLaurent continuous_q_hermite(int n);

// Continuous big q-Hermite H_n(x;a|q) = z^n 2phi0(q^{-n}, a z; - | q; q^n z^-2),
// polynomial in the formal a.
ZLaurent continuous_big_q_hermite(int n);

// Wall / little q-Laguerre p_n(x; q^a_exp | q) = 2phi1(q^{-n}, 0; q^{a_exp+1} | q; q x).
XPoly wall_polynomial(int n, int a_exp);

// q-Laguerre L_n^{(rho)}(x; q), rho >= 0.
XPoly q_laguerre(int n, int rho);

// sum_k q^{k^2(mu+nu) + 2 nu gamma k} (q^{-n};q)_k / ((q;q)_k (q^{gamma+1};q)_k) x^k
XPoly P_polynomial(int n, QuarterExponent mu, QuarterExponent nu, int gamma);

// x^k -> factor^k x^k
inline XPoly scale_argument(const XPoly& f, const PRational& factor) { return scale_variable(f, 0, factor); }

}  // namespace qosc
