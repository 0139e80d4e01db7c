#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qosc/numeric.hpp"
#include "qosc/truncated_series.hpp"
#include "qosc/zlaurent.hpp"

using namespace qosc;

namespace {

PPoly p(int e, long c = 1) { return PPoly::monomial(c, e); }
PPoly q(int k, long c = 1) { return PPoly::monomial(c, 4 * k); }
ZLaurent z(int k) { return z_power(k); }

struct Gen {
  std::mt19937 rng{20240917};

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  PPoly ppoly(int max_terms = 5, int lo = -4, int hi = 8, int cmax = 5) {
    std::vector<PPoly::Term> t;
    const int n = uniform(1, max_terms);
    for (int i = 0; i < n; ++i) t.push_back({uniform(lo, hi), BigRational(uniform(-cmax, cmax), uniform(1, 3))});
    for (auto& x : t) x.coeff.canonicalize();
    return PPoly::from_terms(std::move(t));
  }
  PPoly nonzero_ppoly() {
    for (;;) {
      PPoly f = ppoly();
      if (!f.is_zero()) return f;
    }
  }
  PRational prational() { return {ppoly(), nonzero_ppoly()}; }
  ZLaurent zlaurent(int max_terms = 4) {
    ZLaurent f;
    const int n = uniform(1, max_terms);
    for (int i = 0; i < n; ++i) f.add_term({uniform(-3, 3), uniform(0, 2)}, ppoly(3, -2, 4));
    return f;
  }
  ZLaurent nonzero_zlaurent() {
    for (;;) {
      ZLaurent f = zlaurent();
      if (!f.is_zero()) return f;
    }
  }
};

}  // namespace

TEST_CASE("ring_add examples") {
  CHECK((p(2) + p(2, -1)).is_zero());
  CHECK(PRational(p(2)) + PRational(p(2, -1)) == PRational(0));
  CHECK(PPoly(1) + p(4) + (PPoly(1) - p(4)) == PPoly(2));
  CHECK((z(1) + z(-1)) + (z(1) - z(-1)) == ZLaurent::monomial({1, 0}, 2));
}

TEST_CASE("ring_mul examples") {
  CHECK((PPoly(1) - p(4)) * (PPoly(1) + p(4)) == PPoly(1) - p(8));
  CHECK(z(1) * z(-1) == ZLaurent(1));
  const ZSeries a(1, {ZLaurent(1), ZLaurent(1)});
  const ZSeries b(1, {ZLaurent(1), ZLaurent(-1)});
  const ZSeries prod = a * b;
  CHECK(prod.order() == 1);
  CHECK(prod[0] == ZLaurent(1));
  CHECK(prod[1].is_zero());
}

TEST_CASE("series of different orders do not add") {
  CHECK_THROWS_AS(ZSeries(2) + ZSeries(3), OrderMismatch);
  CHECK((ZSeries(2) * ZSeries(5)).order() == 2);
}

TEST_CASE("laurent_divide_exact examples") {
  CHECK(laurent_divide_exact(z(2) - z(-2), z(1) - z(-1)) == z(1) + z(-1));
  CHECK(laurent_divide_exact(z(1) - z(-1), z(1) - z(-1)) == ZLaurent(1));
  CHECK_THROWS_AS(laurent_divide_exact(z(1), z(1) - z(-1)), NotDivisible);
  CHECK_THROWS_AS(laurent_divide_exact(a_power(1), a_power(2)), NotDivisible);
}

TEST_CASE("PPoly exact division and gcd") {
  const PPoly one_minus_q = PPoly(1) - q(1);
  const PPoly f = one_minus_q * (PPoly(1) + p(1, 2));
  const PPoly g = one_minus_q * (PPoly(1) - q(2)) * p(-3);
  CHECK(gcd(f, g) == q(1) - PPoly(1));  // monic
  CHECK(divide_exact(f, PPoly(1) + p(1, 2)) == one_minus_q);
  // 1 + p divides 1 - q = 1 - p^4
  CHECK(gcd(one_minus_q * (PPoly(1) + p(1)), g) == gcd(f, g) * (PPoly(1) + p(1)));
  CHECK_THROWS_AS(divide_exact(PPoly(1) + p(4), PPoly(1) - p(4)), NotDivisible);
  CHECK(gcd(PPoly(1) + q(1), PPoly(1) - q(1)).is_one());
  CHECK(gcd(PPoly(), p(3)).is_one());
}

TEST_CASE("PRational canonical form") {
  // (1 - q^2) / (q - q^2) = (1 + q) / q
  const PRational r(PPoly(1) - q(2), q(1) - q(2));
  CHECK(r.den().is_one());
  CHECK(r.num() == q(-1) + PPoly(1));
  // denominators are monic with nonzero constant term
  const PRational s(PPoly(3), q(3, 2) - q(4, 2));
  CHECK(s.den().min_exponent() == 0);
  CHECK(s.den().leading_coeff() == 1);
  CHECK_THROWS_AS(PRational(PPoly(1), PPoly()), DivisionByZero);
}

TEST_CASE("series_reciprocal examples") {
  const ZSeries s(2, {ZLaurent(1), ZLaurent(-1)});
  const ZSeries r = series_reciprocal(s);
  for (int n = 0; n <= 2; ++n) CHECK(r[n] == ZLaurent(1));
  const ZSeries one = ZSeries::constant(5, ZLaurent(1));
  CHECK(series_reciprocal(one) == one);
  CHECK_THROWS_AS(series_reciprocal(ZSeries(3)), ZeroConstantTerm);
  CHECK_THROWS_AS(series_reciprocal(ZSeries::constant(3, z(1))), ZeroConstantTerm);
}

TEST_CASE("reciprocal of (t;q)_inf is sum t^n/(q;q)_n") {
  // Oracle: the t^n coefficient of prod_k (1 - q^k t) is
  // (-1)^n q^{n(n-1)/2}/(q;q)_n; checked numerically against a long finite
  // product before being used exactly.
  auto qq = [](int n) {
    PPoly r(1);
    for (int k = 1; k <= n; ++k) r *= PPoly(1) - q(k);
    return r;
  };
  const double qv = 0.3;
  std::vector<double> prod{1.0};
  for (int k = 0; k < 200; ++k) {
    const double c = std::pow(qv, k);
    std::vector<double> next(std::min<std::size_t>(prod.size() + 1, 4), 0.0);
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (i < prod.size()) next[i] += prod[i];
      if (i >= 1 && i - 1 < prod.size()) next[i] -= c * prod[i - 1];
    }
    prod = next;
  }
  ZSeries euler(3);
  for (int n = 0; n <= 3; ++n) {
    const PRational c(q(n * (n - 1) / 2, n % 2 == 0 ? 1 : -1), qq(n));
    CHECK(substitute_numeric(c, qv) == doctest::Approx(prod[static_cast<std::size_t>(n)]).epsilon(1e-12));
    euler.set(n, ZLaurent(c));
  }
  const ZSeries r = series_reciprocal(euler);
  for (int n = 0; n <= 3; ++n) CHECK(r[n] == ZLaurent(PRational(PPoly(1), qq(n))));
}

TEST_CASE("substitute_numeric examples") {
  CHECK(substitute_numeric(p(4), 0.25) == doctest::Approx(0.25));
  CHECK(substitute_numeric_real_x(z(1) + z(-1), 0.5, 0.5) == doctest::Approx(1.0));
  // H_2 = z^2 + (1+q) + z^-2 at q = 0.5, x = 1: 2 T_2(1) + 1.5
  const ZLaurent h2 = z(2) + ZLaurent(PPoly(1) + q(1)) + z(-2);
  CHECK(substitute_numeric_real_x(h2, 0.5, 1.0) == doctest::Approx(3.5));
  CHECK_THROWS_AS(substitute_numeric_real_x(z(1), 0.5, 0.3), AsymmetricElement);
  // complex z on the unit circle agrees with real x = cos(theta)
  const double theta = 0.7;
  const auto zc = substitute_numeric(h2, 0.5, std::polar(1.0, theta));
  CHECK(zc.real() == doctest::Approx(substitute_numeric_real_x(h2, 0.5, std::cos(theta))));
  CHECK(std::abs(zc.imag()) < 1e-14);
}

TEST_CASE("to_x_polynomial uses the Chebyshev basis") {
  // z^2 + z^-2 = 2 T_2(x) = 4x^2 - 2
  const XAPoly x = to_x_polynomial(z(2) + z(-2));
  CHECK(x.coeff({2, 0}) == PRational(4));
  CHECK(x.coeff({0, 0}) == PRational(-2));
  CHECK(x.size() == 2);
}

TEST_CASE("rendering") {
  const ZLaurent h2 = z(2) + ZLaurent(PPoly(1) + q(1)) + z(-2);
  CHECK(h2.str() == "z^2 + (1+q) + z^-2");
  CHECK((z(1) - a_power(1) + z(-1)).str() == "z - a + z^-1");
  CHECK(PPoly::monomial(-1, -2).str() == "-q^(-1/2)");
  CHECK(PRational(PPoly(1), PPoly(1) - q(1)).str() == "1/(1-q)");
  CHECK(PRational(PPoly(1) + q(1), PPoly(1) - q(2)).str() == "1/(1-q)");
  CHECK(PRational(PPoly(2) + p(1), PPoly(1) - q(2)).str() == "(2+q^(1/4))/(1-q^2)");
}

TEST_CASE("property: ring axioms") {
  Gen g;
  for (int i = 0; i < 60; ++i) {
    const PRational a = g.prational();
    const PRational b = g.prational();
    const PRational c = g.prational();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK(a * a.inverse() == PRational(1));
  }
  for (int i = 0; i < 30; ++i) {
    const ZLaurent a = g.zlaurent();
    const ZLaurent b = g.zlaurent();
    const ZLaurent c = g.zlaurent();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("property: exact division inverts multiplication") {
  Gen g;
  for (int i = 0; i < 40; ++i) {
    const ZLaurent a = g.zlaurent();
    const ZLaurent b = g.nonzero_zlaurent();
    CHECK(laurent_divide_exact(a * b, b) == a);
    const PPoly x = g.ppoly();
    const PPoly y = g.nonzero_ppoly();
    CHECK(divide_exact(x * y, y) == x);
  }
}

TEST_CASE("property: canonicalization is idempotent and matches cross-multiplication") {
  Gen g;
  for (int i = 0; i < 60; ++i) {
    const PRational a = g.prational();
    const PRational again(a.num(), a.den());
    CHECK(again == a);
    const PPoly k = g.nonzero_ppoly();
    const PRational scaled(a.num() * k, a.den() * k);
    CHECK(scaled == a);
    CHECK(cross_equal(scaled, a));
    const PRational b = g.prational();
    CHECK((a == b) == cross_equal(a, b));
  }
}

TEST_CASE("property: series reciprocal") {
  Gen g;
  for (int i = 0; i < 10; ++i) {
    ZSeries s(5);
    s.set(0, ZLaurent(PRational(g.nonzero_ppoly())));
    for (int n = 1; n <= 5; ++n) s.set(n, g.zlaurent(2));
    const ZSeries r = series_reciprocal(s);
    CHECK(r * s == ZSeries::constant(5, ZLaurent(1)));
  }
}

TEST_CASE("property: substitute_numeric is a ring homomorphism") {
  Gen g;
  std::uniform_real_distribution<double> qd(0.2, 0.9);
  auto rel = [](double x, double y) { return std::abs(x - y) / std::max({std::abs(x), std::abs(y), 1.0}); };
  for (int i = 0; i < 100; ++i) {
    const PPoly a = g.ppoly(6, 0, 8, 1000);
    const PPoly b = g.ppoly(6, 0, 8, 1000);
    const double qv = qd(g.rng);
    CHECK(rel(substitute_numeric(a * b, qv), substitute_numeric(a, qv) * substitute_numeric(b, qv)) < 1e-12);
    CHECK(rel(substitute_numeric(a + b, qv), substitute_numeric(a, qv) + substitute_numeric(b, qv)) < 1e-12);
  }
}
