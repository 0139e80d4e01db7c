#include "qosc/limits.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qosc {

namespace {

// Round-off allowance in the monotone gate: errors that are already at the
// level of double rounding are not required to keep shrinking.
constexpr double kNoiseFloor = 1e-12;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double binomial(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// x^k a^i -> 2^i ((1-q)/2)^{(i+k-n)/2} x^k a^i
XAPoly apply_scaling(const XAPoly& f, int n) {
  const PRational half_gap(PPoly(1) - PPoly::q_power(1), PPoly(2));
  XAPoly r;
  for (const auto& [key, c] : f.terms()) {
    const int e = key[0] + key[1] - n;
    if (e % 2 != 0) throw Error("limit scaling met a term of the wrong parity");
    r.add_term(key, c * PRational(BigRational(1 << key[1])) * half_gap.pow(e / 2));
  }
  return r;
}

ZLaurent connection_rhs(int n) {
  ZLaurent sum;
  for (int k = 0; k <= n; ++k) {
    const PRational c = PRational(k % 2 == 0 ? 1 : -1) * PRational(PPoly::q_power(k * (k - 1) / 2) * q_binomial(n, k));
    sum += a_power(k) * continuous_q_hermite(n - k) * c;
  }
  return sum;
}

XAPoly build_limit_form(LimitIdentity id, int n) {
  switch (id) {
    case LimitIdentity::Eq6:
      return apply_scaling(to_x_polynomial(continuous_q_hermite(n)), n);
    case LimitIdentity::Eq33:
      return apply_scaling(to_x_polynomial(continuous_big_q_hermite(n)), n);
    case LimitIdentity::Eq31Shadow:
      return apply_scaling(to_x_polynomial(connection_rhs(n)), n);
    case LimitIdentity::Eq32:
    case LimitIdentity::QExpLimit:
      break;
  }
  throw Error("no exact limit form for " + to_string(id));
}

// q^{mu k^2} (1-q)^k/(q;q)_k for k <= order, with (1-q)^k cancelled exactly.
const std::vector<PRational>& q_exponential_coefficients(QuarterExponent mu, int order) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<PRational>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({mu.quarters, order});
  if (inserted) {
    for (int k = 0; k <= order; ++k) {
      it->second.emplace_back(PPoly::q_power_quarters(mu.quarters * k * k) * (PPoly(1) - PPoly::q_power(1)).pow(k),
                              q_factorial(k));
    }
  }
  return it->second;
}

double finite(double v, const char* what) {
  if (!std::isfinite(v)) throw NumericOverflow(std::string("non-finite value in ") + what);
  return v;
}

}  // namespace

double classical_hermite(int n, double x) {
  if (n < 0) throw std::invalid_argument("Hermite degree must be non-negative");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::string to_string(LimitIdentity id) {
  switch (id) {
    case LimitIdentity::Eq6:
      return "eq6";
    case LimitIdentity::Eq32:
      return "eq32";
    case LimitIdentity::Eq33:
      return "eq33";
    case LimitIdentity::Eq31Shadow:
      return "eq31_shadow";
    case LimitIdentity::QExpLimit:
      return "qexp_limit";
  }
  return "?";
}

XAPoly limit_form(LimitIdentity id, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, XAPoly> cache;
  const std::pair<int, int> key{static_cast<int>(id), n};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  XAPoly f = build_limit_form(id, n);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(f)).first->second;
}

double limit_side(LimitIdentity id, int n, double q, double x, double a, QuarterExponent mu, int order) {
  switch (id) {
    case LimitIdentity::Eq32:
      return classical_hermite(n, x - a);
    case LimitIdentity::QExpLimit: {
      long double sum = 0;
      long double power = 1;
      for (const PRational& c : q_exponential_coefficients(mu, order)) {
        sum += substitute_numeric(c, q) * power;
        power *= x;
      }
      return finite(static_cast<double>(sum), "q-exponential");
    }
    default:
      return finite(substitute_numeric(limit_form(id, n), q, x, a), "scaled q-Hermite");
  }
}

double limit_target(LimitIdentity id, int n, double x, double a) {
  switch (id) {
    case LimitIdentity::Eq6:
      return classical_hermite(n, x);
    case LimitIdentity::Eq33:
      return classical_hermite(n, x - a);
    case LimitIdentity::Eq32:
    case LimitIdentity::Eq31Shadow: {
      double sum = 0;
      for (int k = 0; k <= n; ++k) {
        sum += ((n - k) % 2 == 0 ? 1 : -1) * std::pow(2 * a, n - k) * binomial(n, k) * classical_hermite(k, x);
      }
      return sum;
    }
    case LimitIdentity::QExpLimit:
      return std::exp(x);
  }
  return 0;
}

IdentityReport check_limit(const LimitCheckSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  if (spec.q_sequence.empty()) throw std::invalid_argument("q_sequence must not be empty");
  for (std::size_t i = 0; i < spec.q_sequence.size(); ++i) {
    const double q = spec.q_sequence[i];
    if (!(q > 0 && q < 1)) throw std::invalid_argument("q values must lie in (0, 1)");
    if (i > 0 && !(q > spec.q_sequence[i - 1])) throw std::invalid_argument("q_sequence must be strictly increasing");
  }
  if (!(spec.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  if (spec.n < 0) throw std::invalid_argument("n must be non-negative");

  std::optional<Counterexample> cx;
  double worst = 0;
  for (double x : spec.x_points) {
    const double target = limit_target(spec.identity, spec.n, x, spec.a_value);
    std::vector<double> errors;
    for (double q : spec.q_sequence) {
      const double v = limit_side(spec.identity, spec.n, q, x, spec.a_value, spec.mu, spec.series_order);
      errors.push_back(std::abs(v - target) / std::max(std::abs(target), 1.0));
    }
    worst = std::max(worst, errors.back());
    const Json at = {{"x", x}, {"q", spec.q_sequence.back()}};
    if (errors.back() > spec.tolerance) {
      cx = Counterexample{at, "relative error " + fmt(errors.back()) + " exceeds " + fmt(spec.tolerance)};
      break;
    }
    const std::size_t first = errors.size() >= 3 ? errors.size() - 3 : 0;
    for (std::size_t i = first + 1; i < errors.size() && !cx; ++i) {
      if (errors[i] > errors[i - 1] + kNoiseFloor) {
        cx = Counterexample{{{"x", x}, {"q", spec.q_sequence[i]}},
                            "error grew from " + fmt(errors[i - 1]) + " to " + fmt(errors[i])};
      }
    }
    if (cx) break;
  }

  Json params = {{"n", spec.n},
                 {"x_points", spec.x_points},
                 {"q_sequence", spec.q_sequence},
                 {"tolerance", spec.tolerance}};
  if (spec.identity == LimitIdentity::Eq32 || spec.identity == LimitIdentity::Eq33 ||
      spec.identity == LimitIdentity::Eq31Shadow) {
    params["a"] = spec.a_value;
  }
  if (spec.identity == LimitIdentity::QExpLimit) {
    params["mu"] = spec.mu.str();
    params["order"] = spec.series_order;
  }
  IdentityReport r;
  r.identity = to_string(spec.identity);
  r.params = std::move(params);
  r.checked = "relative error against max(|target|, 1) at the last q within tolerance, non-increasing over the last "
              "three q values; worst final error " + fmt(worst);
  r.pass = !cx.has_value();
  r.counterexample = std::move(cx);
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace qosc
