#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qosc/errors.hpp"
#include "qosc/prational.hpp"
#include "qosc/render.hpp"

namespace qosc {

// Sparse polynomial over PRational in the variables named by Vars.
//
// Vars supplies `arity`, `names` and `laurent` (whether a variable may carry
// negative exponents). Terms live in an ordered map keyed by exponent tuple;
// zero coefficients are never stored.
template <class Vars>
class MultiPoly {
 public:
  static constexpr std::size_t arity = Vars::arity;
  using Key = std::array<int, arity>;
  using Map = std::map<Key, PRational>;

  MultiPoly() = default;
  MultiPoly(const PRational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(Key{}, c);
  }
  MultiPoly(const PPoly& c) : MultiPoly(PRational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(PRational(c)) {}          // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(PRational(c)) {}           // NOLINT(google-explicit-constructor)

  static MultiPoly monomial(const Key& key, const PRational& c = PRational(1)) {
    check_key(key);
    MultiPoly r;
    if (!c.is_zero()) r.terms_.emplace(key, c);
    return r;
  }
  static MultiPoly variable(std::size_t index, int power = 1) {
    Key k{};
    k[index] = power;
    return monomial(k);
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{}); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }

  PRational coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? PRational() : it->second;
  }
  PRational constant_term() const { return coeff(Key{}); }

  // Both undefined on zero.
  int min_exponent(std::size_t var) const {
    int m = terms_.begin()->first[var];
    for (const auto& [k, c] : terms_) m = std::min(m, k[var]);
    return m;
  }
  int max_exponent(std::size_t var) const {
    int m = terms_.begin()->first[var];
    for (const auto& [k, c] : terms_) m = std::max(m, k[var]);
    return m;
  }

  void add_term(const Key& key, const PRational& c) {
    if (c.is_zero()) return;
    check_key(key);
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  MultiPoly& operator*=(const PRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const PRational& s) { return a *= s; }
  friend MultiPoly operator*(const PRational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        Key k;
        for (std::size_t i = 0; i < arity; ++i) k[i] = ka[i] + kb[i];
        PRational c = ca * cb;
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
          r.terms_.emplace(k, std::move(c));
        } else {
          it->second += c;
        }
      }
    }
    std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  MultiPoly pow(unsigned e) const {
    MultiPoly result(1);
    MultiPoly base = *this;
    while (e != 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

  // Terms ordered by descending first exponent, then ascending remaining
  // exponents; e.g. "z^2 + (1+q) + z^-2", "z - a + z^-1".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<const typename Map::value_type*> order;
    for (const auto& kv : terms_) order.push_back(&kv);
    std::sort(order.begin(), order.end(), [](const auto* x, const auto* y) {
      if (x->first[0] != y->first[0]) return x->first[0] > y->first[0];
      return x->first < y->first;
    });
    std::string out;
    for (const auto* kv : order) {
      std::string term = render_term(kv->first, kv->second);
      if (out.empty()) {
        out = term;
      } else if (term.front() == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }

 private:
  static void check_key(const Key& key) {
    for (std::size_t i = 0; i < arity; ++i) {
      if (!Vars::laurent[i] && key[i] < 0) {
        throw Error(std::string("negative exponent for polynomial variable ") + Vars::names[i]);
      }
    }
  }

  static std::string render_term(const Key& key, const PRational& c) {
    std::string mono;
    for (std::size_t i = 0; i < arity; ++i) {
      const std::string part = render_var_power(Vars::names[i], key[i]);
      if (part.empty()) continue;
      if (!mono.empty()) mono += "*";
      mono += part;
    }
    const bool atomic = c.is_atomic();
    if (mono.empty()) return atomic ? c.str() : "(" + c.str() + ")";
    if (c.is_one()) return mono;
    if ((-c).is_one()) return "-" + mono;
    return (atomic ? c.str() : "(" + c.str() + ")") + "*" + mono;
  }

  Map terms_;
};

// Exact quotient in the Laurent/polynomial ring described by Vars, by
// lexicographic leading-term division. Throws NotDivisible when no exact
// quotient exists.
template <class Vars>
MultiPoly<Vars> divide_exact(const MultiPoly<Vars>& num, const MultiPoly<Vars>& den) {
  using P = MultiPoly<Vars>;
  if (den.is_zero()) throw DivisionByZero("division by the zero polynomial");
  if (num.is_zero()) return {};
  const auto& [dk, dc] = *den.terms().rbegin();
  const PRational dc_inv = dc.inverse();
  // Lowest first-variable exponent any exact quotient can have.
  const int floor0 = num.min_exponent(0) - den.min_exponent(0);

  P rem = num;
  P quotient;
  while (!rem.is_zero()) {
    const auto& [rk, rc] = *rem.terms().rbegin();
    typename P::Key qk;
    for (std::size_t i = 0; i < P::arity; ++i) qk[i] = rk[i] - dk[i];
    bool ok = qk[0] >= floor0;
    for (std::size_t i = 0; i < P::arity; ++i) ok = ok && (Vars::laurent[i] || qk[i] >= 0);
    if (!ok) throw NotDivisible("(" + num.str() + ") is not divisible by (" + den.str() + ")");
    const P step = P::monomial(qk, rc * dc_inv);
    quotient += step;
    rem -= step * den;
  }
  return quotient;
}

// x_var^k -> factor^k x_var^k.
template <class Vars>
MultiPoly<Vars> scale_variable(const MultiPoly<Vars>& f, std::size_t var, const PRational& factor) {
  MultiPoly<Vars> r;
  for (const auto& [k, c] : f.terms()) r.add_term(k, c * factor.pow(k[var]));
  return r;
}

struct ZAVars {
  static constexpr std::size_t arity = 2;
  static constexpr std::array<const char*, 2> names{"z", "a"};
  static constexpr std::array<bool, 2> laurent{true, false};
};

struct AlphaBetaVars {
  static constexpr std::size_t arity = 2;
  static constexpr std::array<const char*, 2> names{"alpha", "beta"};
  static constexpr std::array<bool, 2> laurent{false, false};
};

struct XVars {
  static constexpr std::size_t arity = 1;
  static constexpr std::array<const char*, 1> names{"x"};
  static constexpr std::array<bool, 1> laurent{false};
};

struct XAVars {
  static constexpr std::size_t arity = 2;
  static constexpr std::array<const char*, 2> names{"x", "a"};
  static constexpr std::array<bool, 2> laurent{false, false};
};

// Laurent in z (z = e^{i theta}), polynomial in the formal parameter a. The
// a slot also hosts other formal parameters (beta, lambda, alpha) where an
// identity needs one.
using ZLaurent = MultiPoly<ZAVars>;
using AlphaBetaPoly = MultiPoly<AlphaBetaVars>;
// Polynomial in one formal variable x.
using XPoly = MultiPoly<XVars>;
// Polynomial in x = cos(theta) and a.
using XAPoly = MultiPoly<XAVars>;

}  // namespace qosc
