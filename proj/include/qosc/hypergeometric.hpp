#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qosc/errors.hpp"
#include "qosc/truncated_series.hpp"

namespace qosc {

// Multiplicative identity shaped like x (series need their order).
template <class Vars>
MultiPoly<Vars> unit_like(const MultiPoly<Vars>&) {
  return MultiPoly<Vars>(1);
}
template <class C>
TruncatedSeries<C> unit_like(const TruncatedSeries<C>& s) {
  return TruncatedSeries<C>::constant(s.order(), C(1));
}

// Inverse of a unit (scalar, or series with invertible constant term).
template <class Vars>
MultiPoly<Vars> invert_unit_of(const MultiPoly<Vars>& x) {
  return invert_unit(x);
}
template <class C>
TruncatedSeries<C> invert_unit_of(const TruncatedSeries<C>& x) {
  return series_reciprocal(x);
}

// (base;q)_n = prod_{k=0}^{n-1} (1 - base q^k), in any ring carrying PRational scalars.
template <class R>
R q_pochhammer(const R& base, int n) {
  R result = unit_like(base);
  for (int k = 0; k < n; ++k) result = result * (unit_like(base) - base * PRational::q_power(k));
  return result;
}

// One numerator or denominator parameter of an r-phi-s series. A parameter
// counts as q^{-n} (and so terminates the series) only through the
// terminating tag, never by inspecting its value.
template <class R>
struct HypergeometricParameter {
  R value;
  std::optional<int> terminating_n;

  static HypergeometricParameter of(R v) { return {std::move(v), std::nullopt}; }
  static HypergeometricParameter q_inverse_power(const R& shape, int n) {
    return {unit_like(shape) * PRational::q_power(-n), n};
  }
  static HypergeometricParameter zero(const R& shape) { return {unit_like(shape) * PRational(0), std::nullopt}; }
};

template <class R>
struct HypergeometricSpec {
  std::vector<HypergeometricParameter<R>> upper;
  std::vector<HypergeometricParameter<R>> lower;
  R argument;
};

// r-phi-s(a_1..a_r; b_1..b_s | q; z)
//   = sum_k (a_1;q)_k...(a_r;q)_k / ((q;q)_k (b_1;q)_k...(b_s;q)_k)
//           [(-1)^k q^{k(k-1)/2}]^{1+s-r} z^k,
// summed to the smallest terminating n, or to `order` when given (whichever is
// smaller). Lower-parameter factors (1 - b q^k) must be invertible scalars (or
// series with invertible constant term); otherwise LowerParameterPole.
template <class R>
R basic_hypergeometric(const HypergeometricSpec<R>& spec, std::optional<int> order = std::nullopt) {
  std::optional<int> kmax = order;
  for (const auto& a : spec.upper) {
    if (a.terminating_n && (!kmax || *a.terminating_n < *kmax)) kmax = a.terminating_n;
  }
  if (!kmax) throw Error("non-terminating basic hypergeometric series needs a truncation order");

  const int balance = 1 + static_cast<int>(spec.lower.size()) - static_cast<int>(spec.upper.size());
  const R one = unit_like(spec.argument);
  R term = one;
  R sum = one;
  for (int k = 0; k < *kmax; ++k) {
    // term_{k+1} / term_k
    R ratio = spec.argument * (PRational(1) - PRational::q_power(k + 1)).inverse() *
              (PRational(-1) * PRational::q_power(k)).pow(balance);
    for (const auto& a : spec.upper) ratio = ratio * (one - a.value * PRational::q_power(k));
    for (const auto& b : spec.lower) {
      const R factor = one - b.value * PRational::q_power(k);
      try {
        ratio = ratio * invert_unit_of(factor);
      } catch (const ZeroConstantTerm&) {
        throw LowerParameterPole("lower parameter factor (1 - b q^" + std::to_string(k) +
                                 ") is not invertible: " + factor.str());
      }
    }
    term = term * ratio;
    sum += term;
  }
  return sum;
}

}  // namespace qosc
