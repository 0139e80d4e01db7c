// Univariate gcd over Q[p], computed on primitive integer polynomials with the
// heuristic gcd (evaluate at a large integer, take the integer gcd, read the
// polynomial back off its balanced base-xi digits). A plain Euclidean
// algorithm over Q is the fallback when the heuristic gives up.

#include <algorithm>
#include <numeric>
#include <optional>

#include "qosc/ppoly.hpp"

namespace qosc {
namespace {

using ZPoly = std::vector<mpz_class>;  // ascending powers, top coefficient nonzero

void trim(ZPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly primitive(ZPoly f) {
  trim(f);
  if (f.empty()) return f;
  mpz_class c = 0;
  for (const auto& x : f) {
    c = gcd(c, x);
    if (c == 1) break;
  }
  if (sgn(f.back()) < 0) c = -c;
  if (c != 1) {
    for (auto& x : f) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return f;
}

mpz_class max_norm(const ZPoly& f) {
  mpz_class m = 0;
  for (const auto& x : f) {
    if (mpz_cmpabs(x.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(x);
  }
  return m;
}

mpz_class evaluate_at(const ZPoly& f, const mpz_class& xi) {
  mpz_class acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc *= xi;
    acc += *it;
  }
  return acc;
}

// Balanced base-xi digits of v.
ZPoly interpolate(mpz_class v, const mpz_class& xi) {
  ZPoly out;
  const mpz_class half = xi / 2;
  mpz_class r;
  while (sgn(v) != 0) {
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
    if (r > half) r -= xi;
    out.push_back(r);
    v -= r;
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
  }
  return out;
}

bool divides(const ZPoly& a, const ZPoly& g) {
  const int da = degree(a);
  const int dg = degree(g);
  if (dg > da) return false;
  if (!mpz_divisible_p(a.front().get_mpz_t(), g.front().get_mpz_t())) return false;
  ZPoly r = a;
  mpz_class c;
  for (int i = da - dg; i >= 0; --i) {
    auto& top = r[static_cast<std::size_t>(i + dg)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), g.back().get_mpz_t())) return false;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), g.back().get_mpz_t());
    for (int j = 0; j <= dg; ++j) {
      mpz_submul(r[static_cast<std::size_t>(i + j)].get_mpz_t(), c.get_mpz_t(), g[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  return std::all_of(r.begin(), r.end(), [](const mpz_class& x) { return sgn(x) == 0; });
}

std::optional<ZPoly> heuristic_gcd(const ZPoly& a, const ZPoly& b) {
  mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  const auto max_deg = static_cast<std::size_t>(std::max(degree(a), degree(b)));
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * max_deg > 8'000'000) break;
    const mpz_class g = gcd(evaluate_at(a, xi), evaluate_at(b, xi));
    ZPoly h = primitive(interpolate(g, xi));
    if (!h.empty() && divides(a, h) && divides(b, h)) return h;
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

ZPoly euclid_gcd(const ZPoly& a, const ZPoly& b) {
  using QPoly = std::vector<mpq_class>;
  auto to_q = [](const ZPoly& f) { return QPoly(f.begin(), f.end()); };
  auto remainder = [](QPoly r, const QPoly& d) {
    while (r.size() >= d.size()) {
      const mpq_class c = r.back() / d.back();
      const std::size_t shift = r.size() - d.size();
      for (std::size_t j = 0; j < d.size(); ++j) r[shift + j] -= c * d[j];
      while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
    }
    return r;
  };
  QPoly x = to_q(a);
  QPoly y = to_q(b);
  while (!y.empty()) {
    QPoly r = remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  mpz_class lcm_den = 1;
  for (const auto& c : x) lcm_den = lcm(lcm_den, c.get_den());
  ZPoly out;
  for (const auto& c : x) out.push_back(mpz_class(c * lcm_den));
  return primitive(out);
}

// Primitive integer image of f(p) = g(p^step), f a polynomial with f(0) != 0.
ZPoly to_zpoly(const PPoly& f, int step) {
  mpz_class den = 1;
  for (const auto& t : f.terms()) den = lcm(den, t.coeff.get_den());
  ZPoly out(static_cast<std::size_t>(f.max_exponent() / step) + 1);
  for (const auto& t : f.terms()) out[static_cast<std::size_t>(t.exp / step)] = mpz_class(t.coeff * den);
  return primitive(out);
}

PPoly unit_normalized(const PPoly& f) {
  PPoly g = f.shifted(-f.min_exponent());
  return g.scaled(1 / g.leading_coeff());
}

}  // namespace

PPoly gcd(const PPoly& a, const PPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return unit_normalized(b);
  if (b.is_zero()) return unit_normalized(a);
  const PPoly x = a.shifted(-a.min_exponent());
  const PPoly y = b.shifted(-b.min_exponent());
  if (x.is_constant() || y.is_constant()) return PPoly(1);

  const int step = std::gcd(x.stride(), y.stride());
  const ZPoly zx = to_zpoly(x, step);
  const ZPoly zy = to_zpoly(y, step);
  ZPoly h;
  if (zx == zy) {
    h = zx;
  } else if (auto heur = heuristic_gcd(zx, zy)) {
    h = std::move(*heur);
  } else {
    h = euclid_gcd(zx, zy);
  }
  if (h.size() <= 1) return PPoly(1);

  std::vector<PPoly::Term> terms;
  const mpq_class lc(h.back());
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (sgn(h[i]) != 0) terms.push_back({static_cast<int>(i) * step, mpq_class(h[i]) / lc});
  }
  return PPoly::from_terms(std::move(terms));
}

}  // namespace qosc
