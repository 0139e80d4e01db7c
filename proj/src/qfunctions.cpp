#include "qosc/qfunctions.hpp"

#include <stdexcept>

namespace qosc {

QuarterExponent QuarterExponent::parse(std::string_view s) {
  if (s == "0") return {0};
  if (s == "1/4") return {1};
  if (s == "1/2") return {2};
  if (s == "3/4") return {3};
  throw std::invalid_argument("exponent must be one of 0, 1/4, 1/2, 3/4 (got '" + std::string(s) + "')");
}

std::string QuarterExponent::str() const {
  switch (quarters) {
    case 0:
      return "0";
    case 2:
      return "1/2";
    case 4:
      return "1";
    default:
      return quarters % 2 == 0 ? std::to_string(quarters / 2) + "/2" : std::to_string(quarters) + "/4";
  }
}

PPoly q_pochhammer_power(int quarters, int n) {
  PPoly r(1);
  for (int k = 0; k < n; ++k) r *= PPoly(1) - PPoly::q_power_quarters(quarters + 4 * k);
  return r;
}

PPoly q_binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return {};
  // Exact by construction; a NotDivisible here is a kernel bug.
  return divide_exact(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

ZSeries q_exponential(QuarterExponent mu, const ZLaurent& coefficient, int order) {
  ZSeries s(order);
  ZLaurent power(1);
  for (int n = 0; n <= order; ++n) {
    s.set(n, power * PRational(PPoly::q_power_quarters(mu.quarters * n * n), q_factorial(n)));
    power = power * coefficient;
  }
  return s;
}

ZSeries infinite_q_pochhammer(const ZLaurent& coefficient, int order) {
  // Comparing t^n on both sides of f(t) = (1 - c t) f(q t):
  //   f_n (1 - q^n) = -c q^{n-1} f_{n-1}.
  ZSeries f(order);
  f.set(0, ZLaurent(1));
  for (int n = 1; n <= order; ++n) {
    const PRational factor(-PPoly::q_power(n - 1), PPoly(1) - PPoly::q_power(n));
    f.set(n, f[n - 1] * coefficient * factor);
  }
  return f;
}

ZSeries curly_E_q(const ZLaurent& a_param, int order) {
  ZSeries s(order);
  for (int n = 0; n <= order; ++n) {
    const PRational shift = PRational::q_power_quarters(2 * (1 - n));  // q^{(1-n)/2}
    const ZLaurent up = q_pochhammer(a_param * shift * z_power(1), n);
    const ZLaurent down = q_pochhammer(a_param * shift * z_power(-1), n);
    s.set(n, up * down * PRational(PPoly::q_power_quarters(n * n), q_factorial(n)));
  }
  return s;
}

ZLaurent continuous_q_hermite(int n) {
  ZLaurent h;
  for (int k = 0; k <= n; ++k) h.add_term({n - 2 * k, 0}, PRational(q_binomial(n, k)));
  return h;
}

ZLaurent continuous_big_q_hermite(int n) {
  using Param = HypergeometricParameter<ZLaurent>;
  const ZLaurent shape(1);
  HypergeometricSpec<ZLaurent> spec{
      {Param::q_inverse_power(shape, n), Param::of(a_power(1) * z_power(1))},
      {},
      z_power(-2) * PRational::q_power(n),
  };
  return z_power(n) * basic_hypergeometric(spec);
}

XPoly wall_polynomial(int n, int a_exp) {
  using Param = HypergeometricParameter<XPoly>;
  const XPoly shape(1);
  HypergeometricSpec<XPoly> spec{
      {Param::q_inverse_power(shape, n), Param::zero(shape)},
      {Param::of(XPoly(PRational::q_power(a_exp + 1)))},
      XPoly::variable(0) * PRational::q_power(1),
  };
  return basic_hypergeometric(spec);
}

XPoly q_laguerre(int n, int rho) {
  if (rho < 0) throw std::invalid_argument("q_laguerre needs rho >= 0");
  using Param = HypergeometricParameter<XPoly>;
  const XPoly shape(1);
  HypergeometricSpec<XPoly> spec{
      {Param::q_inverse_power(shape, n)},
      {Param::of(XPoly(PRational::q_power(rho + 1)))},
      XPoly::variable(0) * PRational(-PPoly::q_power(n + rho + 1)),
  };
  const PRational prefactor(q_pochhammer_power(4 * (rho + 1), n), q_factorial(n));
  return basic_hypergeometric(spec) * prefactor;
}

XPoly P_polynomial(int n, QuarterExponent mu, QuarterExponent nu, int gamma) {
  XPoly out;
  for (int k = 0; k <= n; ++k) {
    const PPoly lower = q_factorial(k) * q_pochhammer_power(4 * (gamma + 1), k);
    if (lower.is_zero()) {
      throw LowerParameterPole("(q^{gamma+1};q)_k vanishes for gamma = " + std::to_string(gamma) +
                               ", k = " + std::to_string(k));
    }
    const int quarters = k * k * (mu.quarters + nu.quarters) + 2 * nu.quarters * gamma * k;
    const PPoly upper = PPoly::q_power_quarters(quarters) * q_pochhammer_power(-4 * n, k);
    out.add_term({k}, PRational(upper, lower));
  }
  return out;
}

}  // namespace qosc
