#include "qosc/prational.hpp"

#include "qosc/errors.hpp"

namespace qosc {

PRational::PRational(PPoly num, PPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

void PRational::canonicalize() {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = PPoly(1);
    return;
  }
  const int shift = den_.min_exponent();
  if (shift != 0) {
    num_ = num_.shifted(-shift);
    den_ = den_.shifted(-shift);
  }
  if (!den_.is_constant()) {
    const PPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  const BigRational lc = den_.leading_coeff();
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
}

PRational PRational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  PPoly n = den_;
  PPoly d = num_;
  const int shift = d.min_exponent();
  n = n.shifted(-shift);
  d = d.shifted(-shift);
  const BigRational lc = d.leading_coeff();
  if (lc != 1) {
    n = n.scaled(1 / lc);
    d = d.scaled(1 / lc);
  }
  return {std::move(n), std::move(d), Canonical{}};
}

PRational PRational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  const auto u = static_cast<unsigned>(e);
  return {num_.pow(u), den_.pow(u), Canonical{}};
}

PRational PRational::operator-() const { return {-num_, den_, Canonical{}}; }

PRational& PRational::operator+=(const PRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero()) {
      den_ = PPoly(1);
    } else if (!den_.is_one()) {
      const PPoly g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
      }
    }
    return *this;
  }
  // (a + c/d) = (a d + c)/d is already reduced.
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    return *this;
  }
  const PPoly g = gcd(den_, o.den_);
  const PPoly b = divide_exact(den_, g);
  const PPoly d = divide_exact(o.den_, g);
  num_ = num_ * d + o.num_ * b;
  if (num_.is_zero()) {
    den_ = PPoly(1);
    return *this;
  }
  den_ = b * o.den_;
  if (!g.is_one()) {
    const PPoly h = gcd(num_, g);
    if (!h.is_one()) {
      num_ = divide_exact(num_, h);
      den_ = divide_exact(den_, h);
    }
  }
  return *this;
}

PRational& PRational::operator-=(const PRational& o) { return *this += -o; }

PRational& PRational::operator*=(const PRational& o) {
  if (is_zero() || o.is_zero()) return *this = PRational();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  PPoly a = num_;
  PPoly c = o.num_;
  PPoly b = den_;
  PPoly d = o.den_;
  if (!d.is_one()) {
    const PPoly g = gcd(a, d);
    if (!g.is_one()) {
      a = divide_exact(a, g);
      d = divide_exact(d, g);
    }
  }
  if (!b.is_one()) {
    const PPoly g = gcd(c, b);
    if (!g.is_one()) {
      c = divide_exact(c, g);
      b = divide_exact(b, g);
    }
  }
  num_ = a * c;
  den_ = b * d;
  return *this;
}

PRational& PRational::operator/=(const PRational& o) { return *this *= o.inverse(); }

std::string PRational::str() const {
  if (den_.is_one()) return num_.str();
  // Display with a positive constant term in the denominator: 1/(1-q), not -1/(-1+q).
  const bool flip = sgn(den_.trailing_coeff()) < 0;
  const PPoly n = flip ? -num_ : num_;
  const PPoly d = flip ? -den_ : den_;
  const std::string top = n.size() == 1 ? n.str() : "(" + n.str() + ")";
  return top + "/(" + d.str() + ")";
}

bool PRational::is_atomic() const { return den_.is_one() && num_.size() <= 1; }

bool cross_equal(const PRational& a, const PRational& b) { return a.num() * b.den() == b.num() * a.den(); }

long double evaluate(const PRational& f, long double p) { return evaluate(f.num(), p) / evaluate(f.den(), p); }

}  // namespace qosc
