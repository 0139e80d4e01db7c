#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "qosc/qfunctions.hpp"

using namespace qosc;

namespace {

PPoly q(int k, long c = 1) { return PPoly::monomial(c, 4 * k); }
PPoly one() { return PPoly(1); }
ZLaurent z(int k) { return z_power(k); }
ZLaurent a() { return a_power(1); }
ZLaurent t_coeff(const PRational& c) { return ZLaurent(c); }

// Gaussian binomial by enumeration: sum over k-subsets S of {0..n-1} of
// q^{sum(S) - k(k-1)/2}.
PPoly q_binomial_by_subsets(int n, int k) {
  std::vector<PPoly::Term> terms;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    int s = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1U << i)) s += i;
    }
    terms.push_back({4 * (s - k * (k - 1) / 2), 1});
  }
  return PPoly::from_terms(std::move(terms));
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("QuarterExponent parsing") {
  CHECK(QuarterExponent::parse("3/4").quarters == 3);
  CHECK(QuarterExponent::parse("0").quarters == 0);
  CHECK(QuarterExponent::parse("1/2").str() == "1/2");
  CHECK_THROWS(QuarterExponent::parse("1"));
  CHECK_THROWS(QuarterExponent::parse("0.25"));
}

TEST_CASE("q_pochhammer examples") {
  CHECK(q_pochhammer(a(), 0) == ZLaurent(1));
  CHECK(q_pochhammer(a(), 2) == (ZLaurent(1) - a()) * (ZLaurent(1) - a() * PRational(q(1))));
  CHECK(q_pochhammer(ZLaurent(q(1)), 3) == ZLaurent((one() - q(1)) * (one() - q(2)) * (one() - q(3))));
  CHECK(q_pochhammer_power(4, 3) == (one() - q(1)) * (one() - q(2)) * (one() - q(3)));
  CHECK(q_pochhammer_power(-4, 2).is_zero());  // (q^{-1};q)_2 contains 1 - q^0
}

TEST_CASE("q_binomial examples") {
  CHECK(q_binomial(5, 0) == one());
  CHECK(q_binomial(2, 1) == one() + q(1));
  CHECK(q_binomial(4, 2) == one() + q(1) + q(2, 2) + q(3) + q(4));
  CHECK(q_binomial(3, 5).is_zero());
  CHECK(q_binomial(3, -1).is_zero());
}

TEST_CASE("q_binomial agrees with subset enumeration") {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(q_binomial(n, k) == q_binomial_by_subsets(n, k));
  }
}

TEST_CASE("property: q_binomial symmetry and q = 1 specialization") {
  for (int n = 0; n <= 20; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(q_binomial(n, k) == q_binomial(n, n - k));
      if (n <= 12) CHECK(q_binomial(n, k).value_at_one() == binomial(n, k));
    }
  }
}

TEST_CASE("q_exponential examples") {
  const ZSeries e0 = q_exponential({0}, ZLaurent(1), 2);
  CHECK(e0[0] == ZLaurent(1));
  CHECK(e0[1] == t_coeff(PRational(one(), one() - q(1))));
  CHECK(e0[2] == t_coeff(PRational(one(), (one() - q(1)) * (one() - q(2)))));
  const ZSeries e_half = q_exponential({2}, ZLaurent(1), 1);
  CHECK(e_half[1] == t_coeff(PRational(PPoly::p_power(2), one() - q(1))));
  const ZSeries e_zero_arg = q_exponential({3}, ZLaurent(), 4);
  CHECK(e_zero_arg == ZSeries::constant(4, ZLaurent(1)));
}

TEST_CASE("reciprocal of the infinite product is e_q") {
  // (t;q)_inf through order 3, inverted, equals sum t^n/(q;q)_n.
  const ZSeries prod = infinite_q_pochhammer(ZLaurent(1), 3);
  CHECK(series_reciprocal(prod) == q_exponential({0}, ZLaurent(1), 3));
  // The t^1 coefficient of (t;q)_inf is -1/(1-q); no finite product has it.
  CHECK(prod[1] == t_coeff(PRational(PPoly(-1), one() - q(1))));
}

TEST_CASE("property: e_q and E_q as infinite products, order 12") {
  for (const ZLaurent& c : {ZLaurent(1), z(1), a() * z(-1)}) {
    CHECK(q_exponential({0}, c, 12) == series_reciprocal(infinite_q_pochhammer(c, 12)));
    // E_q^{(1/2)}(x) = (-q^{1/2} x; q)_inf
    CHECK(q_exponential({2}, c, 12) == infinite_q_pochhammer(c * PRational(-PPoly::p_power(2)), 12));
  }
  // The opposite sign (-q^{-1/2} x; q)_inf disagrees already at first order.
  CHECK_FALSE(q_exponential({2}, ZLaurent(1), 1) == infinite_q_pochhammer(ZLaurent(-PPoly::p_power(-2)), 1));
}

TEST_CASE("curly_E_q examples") {
  // a = 0 reduces to E_q^{(1/4)}, through order 12
  CHECK(curly_E_q(ZLaurent(), 12) == q_exponential({1}, ZLaurent(1), 12));
  CHECK(curly_E_q(a(), 0) == ZSeries::constant(0, ZLaurent(1)));
  const ZSeries e = curly_E_q(a(), 1);
  const ZLaurent expected = (ZLaurent(1) - a() * z(1)) * (ZLaurent(1) - a() * z(-1)) *
                            PRational(PPoly::p_power(1), one() - q(1));
  CHECK(e[1] == expected);
}

TEST_CASE("basic_hypergeometric examples") {
  using Param = HypergeometricParameter<XPoly>;
  const XPoly shape(1);
  const XPoly x = XPoly::variable(0);
  // q^0 upper parameter terminates immediately
  HypergeometricSpec<XPoly> trivial{{Param::q_inverse_power(shape, 0), Param::of(x * PRational(7))},
                                    {Param::of(XPoly(PRational(q(3))))},
                                    x};
  CHECK(basic_hypergeometric(trivial) == XPoly(1));
  // 2phi1(q^-1, 0; a q | q; q x) = 1 - x/(1 - a q), at a = q^2
  HypergeometricSpec<XPoly> wall1{{Param::q_inverse_power(shape, 1), Param::zero(shape)},
                                  {Param::of(XPoly(PRational(q(3))))},
                                  x * PRational(q(1))};
  CHECK(basic_hypergeometric(wall1) == XPoly(1) - x * PRational(one(), one() - q(3)));
  // 1phi1(0; t z | q; t/z) through t^1 is 1 - (t/z)/(1-q)
  using SParam = HypergeometricParameter<ZSeries>;
  const ZSeries tz = ZSeries::monomial(1, 1, z(1));
  const ZSeries t_over_z = ZSeries::monomial(1, 1, z(-1));
  HypergeometricSpec<ZSeries> phi11{{SParam::zero(tz)}, {SParam::of(tz)}, t_over_z};
  const ZSeries s = basic_hypergeometric(phi11, 1);
  CHECK(s[0] == ZLaurent(1));
  CHECK(s[1] == z(-1) * PRational(PPoly(-1), one() - q(1)));
  // non-terminating without an order is refused
  HypergeometricSpec<XPoly> open{{Param::of(x)}, {}, x};
  CHECK_THROWS_AS(basic_hypergeometric(open), Error);
}

TEST_CASE("basic_hypergeometric lower-parameter poles") {
  using Param = HypergeometricParameter<XPoly>;
  const XPoly shape(1);
  HypergeometricSpec<XPoly> pole{{Param::q_inverse_power(shape, 3)},
                                 {Param::of(XPoly(PRational(q(-1))))},
                                 XPoly::variable(0)};
  CHECK_THROWS_AS(basic_hypergeometric(pole), LowerParameterPole);
  CHECK_THROWS_AS(wall_polynomial(2, -2), LowerParameterPole);
}

TEST_CASE("continuous_q_hermite examples") {
  CHECK(continuous_q_hermite(0) == ZLaurent(1));
  CHECK(continuous_q_hermite(1) == z(1) + z(-1));
  CHECK(continuous_q_hermite(2) == z(2) + ZLaurent(one() + q(1)) + z(-2));
}

TEST_CASE("property: continuous_q_hermite symmetric and monic") {
  for (int n = 0; n <= 20; ++n) {
    const ZLaurent h = continuous_q_hermite(n);
    CHECK(is_symmetric(h));
    CHECK(h.max_exponent(0) == n);
    CHECK(coeff(h, n) == PRational(1));
  }
}

TEST_CASE("continuous_big_q_hermite") {
  CHECK(continuous_big_q_hermite(0) == ZLaurent(1));
  CHECK(continuous_big_q_hermite(1) == z(1) + z(-1) - a());
  for (int n = 0; n <= 16; ++n) CHECK(drop_a(continuous_big_q_hermite(n)) == continuous_q_hermite(n));
  CHECK(is_symmetric(continuous_big_q_hermite(6)));
}

TEST_CASE("wall_polynomial") {
  const XPoly x = XPoly::variable(0);
  CHECK(wall_polynomial(0, 0) == XPoly(1));
  // n = 1, a = q^0: 1 + (1 - q^-1) q x/((1-q)(1-q)) = 1 - x/(1-q)
  CHECK(wall_polynomial(1, 0) == XPoly(1) - x * PRational(one(), one() - q(1)));
  for (int n = 0; n <= 6; ++n) CHECK(wall_polynomial(n, 2).constant_term() == PRational(1));
}

TEST_CASE("q_laguerre") {
  const XPoly x = XPoly::variable(0);
  CHECK(q_laguerre(0, 3) == XPoly(1));
  // n = 1, rho = 0: 1 - q x/(1-q)
  CHECK(q_laguerre(1, 0) == XPoly(1) - x * PRational(q(1), one() - q(1)));
  for (int rho = 0; rho <= 3; ++rho) {
    for (int n = 0; n <= 5; ++n) {
      CHECK(q_laguerre(n, rho).constant_term() == PRational(q_pochhammer_power(4 * (rho + 1), n), q_factorial(n)));
    }
  }
  CHECK_THROWS(q_laguerre(1, -1));
}

TEST_CASE("P_polynomial") {
  const XPoly x = XPoly::variable(0);
  CHECK(P_polynomial(0, {1}, {3}, 2) == XPoly(1));
  // n = 1, mu = nu = 0, gamma = 0: 1 - x/(q(1-q))
  CHECK(P_polynomial(1, {0}, {0}, 0) == XPoly(1) - x * PRational(one(), q(1) - q(2)));
  // gamma = 0 with general mu, nu: 1 + q^{mu+nu}(1 - q^-1)/(1-q)^2 x = 1 - q^{mu+nu-1} x/(1-q)
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      const XPoly expected = XPoly(1) - x * PRational(PPoly::p_power(m + n - 4), one() - q(1));
      CHECK(P_polynomial(1, {m}, {n}, 0) == expected);
    }
  }
  CHECK_THROWS_AS(P_polynomial(3, {0}, {0}, -2), LowerParameterPole);
}
