#include "qosc/zlaurent.hpp"

#include <vector>

namespace qosc {

bool is_symmetric(const ZLaurent& f) {
  for (const auto& [k, c] : f.terms()) {
    if (k[0] > 0 && !(f.coeff({-k[0], k[1]}) == c)) return false;
    if (k[0] < 0 && f.coeff({-k[0], k[1]}).is_zero()) return false;
  }
  return true;
}

ZLaurent z_reflect(const ZLaurent& f) {
  ZLaurent r;
  for (const auto& [k, c] : f.terms()) r.add_term({-k[0], k[1]}, c);
  return r;
}

ZLaurent z_dilate(const ZLaurent& f, int quarters) {
  if (quarters == 0) return f;
  ZLaurent r;
  for (const auto& [k, c] : f.terms()) r.add_term(k, c * PRational::q_power_quarters(quarters * k[0]));
  return r;
}

ZLaurent drop_a(const ZLaurent& f) {
  ZLaurent r;
  for (const auto& [k, c] : f.terms()) {
    if (k[1] == 0) r.add_term(k, c);
  }
  return r;
}

XAPoly to_x_polynomial(const ZLaurent& f) {
  if (!is_symmetric(f)) throw AsymmetricElement("element is not symmetric under z -> 1/z: " + f.str());
  if (f.is_zero()) return {};
  const int top = f.max_exponent(0);
  // Monomial coefficients of the Chebyshev polynomials T_0..T_top.
  std::vector<std::vector<BigInt>> cheb;
  cheb.push_back({1});
  if (top >= 1) cheb.push_back({0, 1});
  for (int k = 2; k <= top; ++k) {
    std::vector<BigInt> t(static_cast<std::size_t>(k) + 1);
    const auto& a = cheb[static_cast<std::size_t>(k - 1)];
    const auto& b = cheb[static_cast<std::size_t>(k - 2)];
    for (std::size_t i = 0; i < a.size(); ++i) t[i + 1] += 2 * a[i];
    for (std::size_t i = 0; i < b.size(); ++i) t[i] -= b[i];
    cheb.push_back(std::move(t));
  }
  XAPoly out;
  for (const auto& [k, c] : f.terms()) {
    if (k[0] < 0) continue;
    const auto& t = cheb[static_cast<std::size_t>(k[0])];
    const BigRational scale = k[0] == 0 ? 1 : 2;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (sgn(t[i]) != 0) out.add_term({static_cast<int>(i), k[1]}, c * PRational(BigRational(t[i]) * scale));
    }
  }
  return out;
}

}  // namespace qosc
