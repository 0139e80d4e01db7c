#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qosc/errors.hpp"
#include "qosc/multi_poly.hpp"

namespace qosc {

// Inverse of a ring element that must be a nonzero scalar.
inline PRational invert_unit(const PRational& c) {
  if (c.is_zero()) throw ZeroConstantTerm("constant term is zero");
  return c.inverse();
}

template <class Vars>
MultiPoly<Vars> invert_unit(const MultiPoly<Vars>& c) {
  if (c.is_zero() || !c.is_constant()) {
    throw ZeroConstantTerm("constant term is not an invertible scalar: " + c.str());
  }
  return MultiPoly<Vars>(c.constant_term().inverse());
}

// Formal power series sum_{n=0}^{N} c_n t^n, exact through t^N.
template <class C>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(checked(order)) + 1) {}
  TruncatedSeries(int order, std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<std::size_t>(checked(order)) + 1);
  }

  static TruncatedSeries constant(int order, const C& c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }
  // c t^power; the zero series when power exceeds the order.
  static TruncatedSeries monomial(int order, int power, const C& c) {
    TruncatedSeries s(order);
    if (power <= order) s.coeffs_[static_cast<std::size_t>(power)] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const C& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  void set(int n, C c) { coeffs_[static_cast<std::size_t>(n)] = std::move(c); }
  const std::vector<C>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const C& c) { return c.is_zero(); });
  }

  TruncatedSeries truncated(int order) const {
    return TruncatedSeries(order, std::vector<C>(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1));
  }

  // f(t) -> f(factor * t).
  template <class S>
  TruncatedSeries dilated(const S& factor) const {
    TruncatedSeries r(order());
    C power(1);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
      r.coeffs_[n] = coeffs_[n] * power;
      power = power * factor;
    }
    return r;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    require_same_order(o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    require_same_order(o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
    return *this;
  }
  TruncatedSeries& operator*=(const C& s) {
    for (auto& c : coeffs_) c = c * s;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const C& s) { return a *= s; }
  friend TruncatedSeries operator*(const C& s, TruncatedSeries a) { return a *= s; }

  // Cauchy product, truncated at the smaller order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.order(), b.order());
    TruncatedSeries r(order);
    for (int i = 0; i <= order; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= order; ++j) {
        if (b[j].is_zero()) continue;
        r.coeffs_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
      }
    }
    return r;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

  std::string str(const char* var = "t") const {
    std::string out;
    for (int n = 0; n <= order(); ++n) {
      if (coeffs_[static_cast<std::size_t>(n)].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + coeffs_[static_cast<std::size_t>(n)].str() + ")";
      if (n > 0) out += "*" + render_var_power(var, n);
    }
    return (out.empty() ? "0" : out) + " + O(" + render_var_power(var, order() + 1) + ")";
  }

 private:
  static int checked(int order) {
    if (order < 0) throw Error("series order must be non-negative");
    return order;
  }
  void require_same_order(const TruncatedSeries& o) const {
    if (o.order() != order()) {
      throw OrderMismatch("series orders differ: " + std::to_string(order()) + " vs " + std::to_string(o.order()));
    }
  }

  std::vector<C> coeffs_;
};

// r with r * s = 1 through the order of s.
template <class C>
TruncatedSeries<C> series_reciprocal(const TruncatedSeries<C>& s) {
  const C inv0 = invert_unit(s[0]);
  TruncatedSeries<C> r(s.order());
  r.set(0, inv0);
  for (int n = 1; n <= s.order(); ++n) {
    C acc;
    for (int k = 1; k <= n; ++k) {
      if (!s[k].is_zero() && !r[n - k].is_zero()) acc += s[k] * r[n - k];
    }
    r.set(n, -(acc * inv0));
  }
  return r;
}

using ZSeries = TruncatedSeries<ZLaurent>;

}  // namespace qosc
