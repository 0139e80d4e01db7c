#include "qosc/numeric.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qosc/errors.hpp"
#include "qosc/zlaurent.hpp"

namespace qosc {
namespace {

long double base_point(double q_val) {
  if (!(q_val > 0.0 && q_val < 1.0)) throw std::domain_error("q must lie in (0, 1)");
  return std::pow(static_cast<long double>(q_val), 0.25L);
}

}  // namespace

double substitute_numeric(const PPoly& f, double q_val) { return static_cast<double>(evaluate(f, base_point(q_val))); }

double substitute_numeric(const PRational& f, double q_val) {
  return static_cast<double>(evaluate(f, base_point(q_val)));
}

std::complex<double> substitute_numeric(const ZLaurent& f, double q_val, std::complex<double> z_val, double a_val) {
  const long double p = base_point(q_val);
  const std::complex<long double> z(z_val.real(), z_val.imag());
  std::complex<long double> acc = 0;
  for (const auto& [k, c] : f.terms()) {
    acc += evaluate(c, p) * std::pow(z, k[0]) * std::pow(static_cast<long double>(a_val), k[1]);
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

double substitute_numeric_real_x(const ZLaurent& f, double q_val, double x_val, double a_val) {
  if (!is_symmetric(f)) throw AsymmetricElement("real-x substitution needs a z <-> 1/z symmetric element");
  const long double p = base_point(q_val);
  if (f.is_zero()) return 0.0;
  const int top = f.max_exponent(0);
  std::vector<long double> cheb(static_cast<std::size_t>(top) + 1);
  cheb[0] = 1;
  if (top >= 1) cheb[1] = x_val;
  for (std::size_t k = 2; k < cheb.size(); ++k) cheb[k] = 2 * x_val * cheb[k - 1] - cheb[k - 2];
  long double acc = 0;
  for (const auto& [k, c] : f.terms()) {
    if (k[0] < 0) continue;
    const long double basis = k[0] == 0 ? 1.0L : 2 * cheb[static_cast<std::size_t>(k[0])];
    acc += evaluate(c, p) * basis * std::pow(static_cast<long double>(a_val), k[1]);
  }
  return static_cast<double>(acc);
}

double substitute_numeric(const XAPoly& f, double q_val, double x_val, double a_val) {
  const long double p = base_point(q_val);
  long double acc = 0;
  for (const auto& [k, c] : f.terms()) {
    acc += evaluate(c, p) * std::pow(static_cast<long double>(x_val), k[0]) *
           std::pow(static_cast<long double>(a_val), k[1]);
  }
  return static_cast<double>(acc);
}

}  // namespace qosc
