#include "qosc/oscillator.hpp"

#include <algorithm>

namespace qosc {

namespace {

const ZLaurent& z_minus_inverse() {
  static const ZLaurent d = z_power(1) - z_power(-1);
  return d;
}

ZLaurent half_shift(const ZLaurent& f, int sign) { return z_dilate(f, 2 * sign); }

SparseMatrix<AlphaBetaPoly> lift(const SparseMatrix<PRational>& m, const AlphaBetaPoly& factor) {
  SparseMatrix<AlphaBetaPoly> r(m.dim());
  for (const auto& [ij, v] : m.entries()) r.set(ij.first, ij.second, factor * v);
  return r;
}

// sum_{j<=N} c_j G^j with c_j = q^{quarters j^2} (1-q)^j shift^j / (q;q)_j * var^j.
SparseMatrix<AlphaBetaPoly> exponential_of(const SparseMatrix<PRational>& g, QuarterExponent mu, int order,
                                           const PRational& shift, std::size_t var) {
  SparseMatrix<AlphaBetaPoly> sum(g.dim());
  SparseMatrix<PRational> power = SparseMatrix<PRational>::identity(g.dim());
  const PRational one_minus_q = PRational(1) - PRational::q_power(1);
  for (int j = 0; j <= order && !power.is_zero(); ++j) {
    const PRational c = PRational::q_power_quarters(mu.quarters * j * j) * (one_minus_q * shift).pow(j) /
                        PRational(q_factorial(j));
    sum += lift(power, AlphaBetaPoly::variable(var, j) * c);
    power = power * g;
  }
  return sum;
}

}  // namespace

std::string to_string(Generator g) {
  switch (g) {
    case Generator::APlus:
      return "A+";
    case Generator::AMinus:
      return "A-";
    case Generator::K:
      return "K";
  }
  return "?";
}

std::string to_string(RealizedOperator op) {
  switch (op) {
    case RealizedOperator::APlus:
      return "A+";
    case RealizedOperator::AMinus:
      return "A-";
    case RealizedOperator::K:
      return "K";
    case RealizedOperator::Tau:
      return "tau";
    case RealizedOperator::DzPlus:
      return "Dz+";
    case RealizedOperator::DzMinus:
      return "Dz-";
  }
  return "?";
}

GeneratorMatrix generator_matrix(Generator which, int dim) {
  GeneratorMatrix g{to_string(which), SparseMatrix<PRational>(dim)};
  const PPoly one_minus_q = PPoly(1) - PPoly::q_power(1);
  for (int n = 0; n < dim; ++n) {
    switch (which) {
      case Generator::APlus:
        if (n + 1 < dim) g.matrix.set(n + 1, n, PRational(-PPoly::q_power_quarters(-2 * (n + 1))));
        break;
      case Generator::AMinus:
        if (n >= 1) {
          const PPoly num = PPoly::q_power_quarters(2 * n + 4) * (PPoly(1) - PPoly::q_power(-n));
          g.matrix.set(n - 1, n, PRational(num, one_minus_q));
        }
        break;
      case Generator::K:
        g.matrix.set(n, n, PRational::q_power_quarters(-2 * n));
        break;
    }
  }
  return g;
}

RepVector apply(const GeneratorMatrix& g, const RepVector& v) {
  if (v.dim != g.matrix.dim()) throw Error("vector and matrix dimensions differ");
  RepVector r{v.dim, {}};
  for (const auto& [ij, entry] : g.matrix.entries()) {
    auto it = v.coeffs.find(ij.second);
    if (it == v.coeffs.end()) continue;
    r.coeffs[ij.first] += entry * it->second;
  }
  std::erase_if(r.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

ZLaurent apply_realization(RealizedOperator which, const ZLaurent& f) {
  switch (which) {
    case RealizedOperator::APlus: {
      const ZLaurent num = z_power(-2) * half_shift(f, 1) - z_power(2) * half_shift(f, -1);
      return laurent_divide_exact(num, z_minus_inverse()) * PRational::q_power_quarters(-2);
    }
    case RealizedOperator::AMinus:
      return apply_realization(RealizedOperator::Tau, f) *
             PRational(PPoly::q_power(1), PPoly(1) - PPoly::q_power(1));
    case RealizedOperator::K: {
      const ZLaurent num = z_power(1) * half_shift(f, -1) - z_power(-1) * half_shift(f, 1);
      return laurent_divide_exact(num, z_minus_inverse());
    }
    case RealizedOperator::Tau:
      return laurent_divide_exact(half_shift(f, 1) - half_shift(f, -1), z_minus_inverse());
    case RealizedOperator::DzPlus:
    case RealizedOperator::DzMinus: {
      const int sign = which == RealizedOperator::DzPlus ? 1 : -1;
      ZLaurent r;
      for (const auto& [k, c] : f.terms()) {
        r.add_term({k[0] - 1, k[1]}, c * (PRational(1) - PRational::q_power(sign * k[0])));
      }
      return r;
    }
  }
  return {};
}

ZLaurent apply_realization(Generator which, const ZLaurent& f) {
  switch (which) {
    case Generator::APlus:
      return apply_realization(RealizedOperator::APlus, f);
    case Generator::AMinus:
      return apply_realization(RealizedOperator::AMinus, f);
    case Generator::K:
      return apply_realization(RealizedOperator::K, f);
  }
  return {};
}

AlphaBetaPoly at_alpha_beta(const XPoly& f, const PRational& factor) {
  AlphaBetaPoly r;
  for (const auto& [k, c] : f.terms()) r.add_term({k[0], k[0]}, c * factor.pow(k[0]));
  return r;
}

MatrixElementResult matrix_element_closed_form(QuarterExponent mu, QuarterExponent nu, int m, int n,
                                               LowerPrefactor orientation) {
  if (m < 0 || n < 0) throw Error("matrix indices must be non-negative");
  const PRational one_minus_q = PRational(1) - PRational::q_power(1);
  const PRational arg = -one_minus_q;  // P is evaluated at -(1-q) alpha beta
  MatrixElementResult r{m, n, mu, nu, {}};
  if (m <= n) {
    const int d = n - m;
    const int quarters = d * ((nu.quarters + 1) * d - 2 * n - 1);
    const AlphaBetaPoly prefactor =
        AlphaBetaPoly::variable(1, d) * (PRational(d % 2 == 0 ? 1 : -1) * PRational::q_power_quarters(quarters) *
                                         PRational(q_binomial(n, m)));
    r.value = prefactor * at_alpha_beta(P_polynomial(m, mu, nu, d), arg);
  } else {
    const int d = m - n;
    int quarters = d * ((mu.quarters - 1) * d - 2 * n - 1);
    if (orientation == LowerPrefactor::Swapped) quarters = -quarters;
    const AlphaBetaPoly prefactor =
        AlphaBetaPoly::variable(0, d) *
        ((-one_minus_q).pow(d) / PRational(q_factorial(d)) * PRational::q_power_quarters(quarters));
    r.value = prefactor * at_alpha_beta(P_polynomial(n, nu, mu, d), arg);
  }
  return r;
}

MatrixElementOracle::MatrixElementOracle(QuarterExponent mu, QuarterExponent nu, int dim, int series_order)
    : dim_(dim),
      order_(series_order),
      left_(exponential_of(generator_matrix(Generator::APlus, dim).matrix, mu, series_order, PRational(1), 0)),
      right_(exponential_of(generator_matrix(Generator::AMinus, dim).matrix, nu, series_order,
                            PRational::q_power(-1), 1)) {}

AlphaBetaPoly MatrixElementOracle::entry(int m, int n) const {
  if (m < 0 || n < 0) throw Error("matrix indices must be non-negative");
  if (dim_ <= std::max(m, n) + order_ || order_ < m + n) {
    throw WindowTooSmall("entry (" + std::to_string(m) + "," + std::to_string(n) + ") needs D > max(m,n) + N and N >= m + n; got D = " +
                         std::to_string(dim_) + ", N = " + std::to_string(order_));
  }
  AlphaBetaPoly sum;
  for (int l = 0; l < dim_; ++l) {
    const AlphaBetaPoly a = left_.at(m, l);
    if (a.is_zero()) continue;
    const AlphaBetaPoly b = right_.at(l, n);
    if (!b.is_zero()) sum += a * b;
  }
  return sum;
}

AlphaBetaPoly matrix_element_oracle(QuarterExponent mu, QuarterExponent nu, int m, int n, int dim,
                                    int series_order) {
  if (dim <= std::max(m, n) + series_order || series_order < m + n) {
    throw WindowTooSmall("D > max(m,n) + N and N >= m + n are required");
  }
  return MatrixElementOracle(mu, nu, dim, series_order).entry(m, n);
}

ZSeries apply_U_to_vacuum(QuarterExponent mu, int order) {
  ZSeries s(order);
  ZLaurent f(1);
  for (int m = 0; m <= order; ++m) {
    s.set(m, f * PRational(PPoly::q_power_quarters(mu.quarters * m * m), q_factorial(m)));
    if (m < order) f = apply_realization(RealizedOperator::APlus, f);
  }
  return s;
}

ZLaurent apply_E_A_minus(const ZLaurent& start) {
  const PRational step = (PRational(1) - PRational::q_power(1)) * PRational::q_power(-1);
  ZLaurent sum;
  ZLaurent f = start;
  for (int k = 0; !f.is_zero(); ++k) {
    const PRational c = PRational(PPoly::q_power_quarters(k * k), q_factorial(k)) * step.pow(k);
    sum += f * a_power(k) * c;
    f = apply_realization(RealizedOperator::AMinus, f);
  }
  return sum;
}

}  // namespace qosc
