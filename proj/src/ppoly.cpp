#include "qosc/ppoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qosc/errors.hpp"
#include "qosc/render.hpp"

namespace qosc {

std::string to_string(const BigRational& r) { return r.get_str(); }

namespace {

void normalize(std::vector<PPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.exp < b.exp; });
  std::vector<PPoly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  terms = std::move(out);
}

}  // namespace

PPoly::PPoly(const BigRational& c) {
  if (sgn(c) != 0) terms_.push_back({0, c});
}

PPoly PPoly::monomial(const BigRational& c, int exp) {
  PPoly r;
  if (sgn(c) != 0) r.terms_.push_back({exp, c});
  return r;
}

PPoly PPoly::from_terms(std::vector<Term> terms) {
  normalize(terms);
  PPoly r;
  r.terms_ = std::move(terms);
  return r;
}

bool PPoly::is_one() const { return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff == 1; }

bool PPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return qosc::is_integral(t.coeff); });
}

BigRational PPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp, [](const Term& t, int e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

int PPoly::stride() const {
  int g = 0;
  for (const auto& t : terms_) g = std::gcd(g, t.exp - terms_.front().exp);
  return g;
}

PPoly PPoly::shifted(int k) const {
  PPoly r = *this;
  for (auto& t : r.terms_) t.exp += k;
  return r;
}

PPoly PPoly::scaled(const BigRational& c) const {
  if (sgn(c) == 0) return {};
  PPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

PPoly PPoly::inflated(int k) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.exp *= k;
  return from_terms(std::move(out));
}

BigRational PPoly::value_at_one() const {
  BigRational s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

PPoly PPoly::pow(unsigned e) const {
  PPoly result(1);
  PPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

PPoly PPoly::operator-() const {
  PPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

PPoly& PPoly::operator+=(const PPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      out.push_back(*b++);
    } else {
      BigRational c = a->coeff + b->coeff;
      if (sgn(c) != 0) out.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

PPoly& PPoly::operator-=(const PPoly& o) { return *this += -o; }

PPoly& PPoly::operator*=(const PPoly& o) { return *this = *this * o; }

PPoly operator*(const PPoly& a, const PPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) return b.scaled(a.terms_[0].coeff).shifted(a.terms_[0].exp);
  if (b.is_monomial()) return a.scaled(b.terms_[0].coeff).shifted(b.terms_[0].exp);

  const int lo = a.min_exponent() + b.min_exponent();
  const int hi = a.max_exponent() + b.max_exponent();
  int step = std::gcd(a.stride(), b.stride());
  if (step == 0) step = 1;
  const std::size_t slots = static_cast<std::size_t>((hi - lo) / step) + 1;

  std::vector<PPoly::Term> out;
  if (a.is_integral() && b.is_integral()) {
    std::vector<mpz_class> acc(slots);
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) {
        const auto idx = static_cast<std::size_t>((s.exp + t.exp - lo) / step);
        mpz_addmul(acc[idx].get_mpz_t(), s.coeff.get_num_mpz_t(), t.coeff.get_num_mpz_t());
      }
    }
    for (std::size_t i = 0; i < slots; ++i) {
      if (sgn(acc[i]) != 0) out.push_back({lo + static_cast<int>(i) * step, BigRational(acc[i])});
    }
  } else {
    std::vector<BigRational> acc(slots);
    BigRational tmp;
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) {
        const auto idx = static_cast<std::size_t>((s.exp + t.exp - lo) / step);
        mpq_mul(tmp.get_mpq_t(), s.coeff.get_mpq_t(), t.coeff.get_mpq_t());
        acc[idx] += tmp;
      }
    }
    for (std::size_t i = 0; i < slots; ++i) {
      if (sgn(acc[i]) != 0) out.push_back({lo + static_cast<int>(i) * step, std::move(acc[i])});
    }
  }
  PPoly r;
  r.terms_ = std::move(out);
  return r;
}

std::optional<PPoly> try_divide_exact(const PPoly& num, const PPoly& den) {
  if (den.is_zero()) throw DivisionByZero("PPoly division by zero");
  if (num.is_zero()) return PPoly{};
  if (den.is_monomial()) {
    const auto& t = den.terms().front();
    return num.scaled(1 / t.coeff).shifted(-t.exp);
  }

  // Any exact quotient has exponents in [qlo, qhi].
  const int qlo = num.min_exponent() - den.min_exponent();
  const int qhi = num.max_exponent() - den.max_exponent();
  if (qhi < qlo) return std::nullopt;

  const int base = num.min_exponent();
  const int dmax = den.max_exponent();
  const BigRational& lc = den.leading_coeff();
  std::vector<BigRational> rem(static_cast<std::size_t>(num.max_exponent() - base) + 1);
  for (const auto& t : num.terms()) rem[static_cast<std::size_t>(t.exp - base)] = t.coeff;

  std::vector<PPoly::Term> quotient;
  BigRational c;
  BigRational tmp;
  for (int e = qhi; e >= qlo; --e) {
    auto& top = rem[static_cast<std::size_t>(e + dmax - base)];
    if (sgn(top) == 0) continue;
    c = top / lc;
    for (const auto& t : den.terms()) {
      mpq_mul(tmp.get_mpq_t(), c.get_mpq_t(), t.coeff.get_mpq_t());
      rem[static_cast<std::size_t>(e + t.exp - base)] -= tmp;
    }
    quotient.push_back({e, c});
  }
  for (const auto& r : rem) {
    if (sgn(r) != 0) return std::nullopt;
  }
  std::reverse(quotient.begin(), quotient.end());
  return PPoly::from_terms(std::move(quotient));
}

PPoly divide_exact(const PPoly& num, const PPoly& den) {
  auto q = try_divide_exact(num, den);
  if (!q) throw NotDivisible("(" + num.str() + ") is not divisible by (" + den.str() + ")");
  return std::move(*q);
}

long double evaluate(const PPoly& f, long double p) {
  long double s = 0;
  for (const auto& t : f.terms()) s += t.coeff.get_d() * std::pow(p, static_cast<long double>(t.exp));
  return s;
}

std::string PPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string term;
    const std::string power = render_q_power(t.exp);
    if (power.empty()) {
      term = t.coeff.get_str();
    } else if (t.coeff == 1) {
      term = power;
    } else if (t.coeff == -1) {
      term = "-" + power;
    } else {
      term = t.coeff.get_str() + "*" + power;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

}  // namespace qosc
