#include "qosc/identity.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace qosc {

namespace {

using Clock = std::chrono::steady_clock;

// Runs one comparison; an empty result means both sides agree. Exceptions
// are failures at that point, not errors of the verifier.
template <class F>
std::optional<Counterexample> probe(Json at, F&& check) {
  try {
    std::string diff = check();
    if (diff.empty()) return std::nullopt;
    return Counterexample{std::move(at), std::move(diff)};
  } catch (const std::exception& e) {
    return Counterexample{std::move(at), std::string("error: ") + e.what()};
  }
}

template <class T>
std::string diff_of(const T& lhs, const T& rhs) {
  const T d = lhs - rhs;
  return d.is_zero() ? std::string() : d.str();
}

IdentityReport finish(std::string id, Json params, std::string checked, Clock::time_point start,
                      std::optional<Counterexample> cx) {
  IdentityReport r;
  r.identity = std::move(id);
  r.params = std::move(params);
  r.checked = std::move(checked);
  r.pass = !cx.has_value();
  r.counterexample = std::move(cx);
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return r;
}

PRational sign(int k) { return PRational(k % 2 == 0 ? 1 : -1); }
ZLaurent z(int k) { return z_power(k); }

// sum_k (-1)^k a^k q^{k(k-1)/2} [n k]_q H_{n-k}
ZLaurent connection_sum(int n, const HermiteProvider& hermite) {
  ZLaurent sum;
  for (int k = 0; k <= n; ++k) {
    const PRational c = sign(k) * PRational(PPoly::q_power(k * (k - 1) / 2) * q_binomial(n, k));
    sum += a_power(k) * hermite(n - k) * c;
  }
  return sum;
}

// a -> value
ZLaurent specialize_a(const ZLaurent& f, const PRational& value) {
  ZLaurent r;
  for (const auto& [k, c] : f.terms()) r.add_term({k[0], 0}, c * value.pow(k[1]));
  return r;
}

// Double sums of the generating-function derivations, as series in alpha:
// sum_m sum_k w(m) z^{m-2k} / ((q;q)_{m-k} (q;q)_k).
template <class Weight>
ZSeries split_double_sum(int order, Weight weight) {
  ZSeries s(order);
  for (int m = 0; m <= order; ++m) {
    ZLaurent c;
    for (int k = 0; k <= m; ++k) c += z(m - 2 * k) * PRational(PPoly(1), q_factorial(m - k) * q_factorial(k));
    s.set(m, c * weight(m));
  }
  return s;
}

}  // namespace

Json to_json(const IdentityReport& r) {
  Json j;
  j["identity"] = r.identity;
  j["params"] = r.params;
  j["status"] = r.pass ? "pass" : "fail";
  j["checked"] = r.checked;
  if (r.counterexample) j["counterexample"] = Json{{"at", r.counterexample->at}, {"difference", r.counterexample->difference}};
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string to_text(const IdentityReport& r) {
  std::string out = r.identity + ": " + (r.pass ? "pass" : "fail") + " " + r.params.dump() + "\n";
  out += "  checked: " + r.checked + "\n";
  if (r.counterexample) {
    out += "  counterexample at " + r.counterexample->at.dump() + ": " + r.counterexample->difference + "\n";
  }
  return out;
}

HermiteProvider standard_hermite() { return [](int n) { return continuous_q_hermite(n); }; }

ZLaurent connection_difference(int n, const HermiteProvider& hermite) {
  return continuous_big_q_hermite(n) - connection_sum(n, hermite);
}

ZLaurent resummed_action(int n) {
  // With c = q^{1-n} z/a the k-th term is
  //   prod_{j<n}(z - q^j a) (q^-n;q)_k q^k z^-k / ((q;q)_k prod_{i<k}(a - q^{1-n+i} z)),
  // and every a - q^{1-n+i} z divides the front product.
  ZLaurent front(1);
  for (int j = 0; j < n; ++j) front *= z(1) - a_power(1) * PRational::q_power(j);
  ZLaurent sum;
  for (int k = 0; k <= n; ++k) {
    const PRational c(q_pochhammer_power(-4 * n, k) * PPoly::q_power(k), q_factorial(k));
    sum += front * z(-k) * c;
    if (k < n) front = divide_exact(front, a_power(1) - z(1) * PRational::q_power(1 - n + k));
  }
  return sum;
}

ZSeries generating_function_lhs(GeneratingFunction which, int order) {
  if (which == GeneratingFunction::Eq37) {
    return q_exponential({0}, z(1), order) * q_exponential({0}, z(-1), order);
  }
  using Param = HypergeometricParameter<ZSeries>;
  const ZSeries tz = ZSeries::monomial(order, 1, z(1));
  const HypergeometricSpec<ZSeries> spec{{Param::zero(tz)}, {Param::of(tz)}, ZSeries::monomial(order, 1, z(-1))};
  return infinite_q_pochhammer(z(1), order) * basic_hypergeometric(spec, order);
}

ZLaurent generating_function_rhs_coeff(GeneratingFunction which, int n, const HermiteProvider& hermite) {
  PRational c(PPoly(1), q_factorial(n));
  if (which == GeneratingFunction::Eq40) c *= sign(n) * PRational::q_power(n * (n - 1) / 2);
  return hermite(n) * c;
}

IdentityReport verify_connection_formula(int n_max, const HermiteProvider& hermite) {
  const auto start = Clock::now();
  std::optional<Counterexample> cx;
  for (int n = 0; n <= n_max && !cx; ++n) {
    cx = probe({{"n", n}}, [&] { return diff_of(continuous_big_q_hermite(n), connection_sum(n, hermite)); });
    if (cx) break;
    // Operator side with a = q^{-n/2+1/4} beta, i.e. beta^k -> q^{k(2n-1)/4} a^k.
    ZLaurent action;
    cx = probe({{"n", n}, {"step", "operator action vs coefficient sum"}}, [&] {
      action = substitute_a(apply_E_A_minus(hermite(n)), PRational::q_power_quarters(2 * n - 1));
      return diff_of(action, connection_sum(n, hermite));
    });
    if (cx) break;
    cx = probe({{"n", n}, {"step", "operator action vs resummed 2phi1"}},
               [&] { return diff_of(action, resummed_action(n)); });
    if (cx) break;
    cx = probe({{"n", n}, {"step", "resummed 2phi1 vs big q-Hermite"}},
               [&] { return diff_of(resummed_action(n), continuous_big_q_hermite(n)); });
  }
  return finish("eq31", {{"n_max", n_max}},
                "H_n(x;a|q) = sum_k (-1)^k a^k q^{k(k-1)/2} [n k]_q H_{n-k}(x|q) exactly for n <= " +
                    std::to_string(n_max) +
                    "; operator action of E_q(-;0,(beta(1-q)/q)A-) on H_n with a = q^{-n/2+1/4} beta equals the "
                    "coefficient sum, the resummed 2phi1 and H_n(x;a|q)",
                start, std::move(cx));
}

IdentityReport verify_generating_function(GeneratingFunction which, int order, const HermiteProvider& hermite) {
  const auto start = Clock::now();
  const bool eq37 = which == GeneratingFunction::Eq37;
  std::optional<Counterexample> cx;
  ZSeries lhs(order);
  cx = probe({{"step", "left side"}}, [&] {
    lhs = generating_function_lhs(which, order);
    return std::string();
  });
  for (int n = 0; n <= order && !cx; ++n) {
    cx = probe({{"t_power", n}}, [&] { return diff_of(lhs[n], generating_function_rhs_coeff(which, n, hermite)); });
  }
  if (!cx) {
    // Replay: U applied to 1 through the realized A+, the split double sum,
    // and the closed product at t = -q^{-1/4} alpha (resp. q^{1/4} alpha).
    const QuarterExponent mu{eq37 ? 1 : 3};
    const ZSeries via_operator = apply_U_to_vacuum(mu, order);
    const ZSeries double_sum = eq37 ? split_double_sum(order, [](int m) { return sign(m) * PRational::q_power_quarters(-m); })
                                    : split_double_sum(order, [](int m) {
                                        return sign(m) * PRational::q_power_quarters(2 * m * (m - 1) + m);
                                      });
    const ZSeries closed = lhs.dilated(eq37 ? -PRational::q_power_quarters(-1) : PRational::q_power_quarters(1));
    for (int m = 0; m <= order && !cx; ++m) {
      cx = probe({{"alpha_power", m}, {"step", "operator action vs double sum"}},
                 [&] { return diff_of(via_operator[m], double_sum[m]); });
      if (cx) break;
      cx = probe({{"alpha_power", m}, {"step", "double sum vs closed form"}},
                 [&] { return diff_of(double_sum[m], closed[m]); });
    }
  }
  const std::string checked =
      eq37 ? "e_q(tz) e_q(t/z) = sum t^n H_n/(q;q)_n coefficientwise through t^" + std::to_string(order) +
                 "; E_q^{(1/4)}(alpha A+) 1 via the realization equals the split double sum and "
                 "e_q(-q^{-1/4} alpha z) e_q(-q^{-1/4} alpha/z)"
           : "(tz;q)_inf 1phi1(0; tz | q; t/z) = sum q^{n(n-1)/2} (-t)^n H_n/(q;q)_n coefficientwise through t^" +
                 std::to_string(order) +
                 "; E_q^{(3/4)}(alpha A+) 1 via the realization equals the split double sum and the closed form at "
                 "t = q^{1/4} alpha";
  return finish(eq37 ? "eq37" : "eq40", {{"order", order}}, checked, start, std::move(cx));
}

IdentityReport verify_q_binomial_theorem(int order) {
  const auto start = Clock::now();
  std::optional<Counterexample> cx;
  ZSeries rhs(order);
  cx = probe({{"step", "right side"}}, [&] {
    rhs = infinite_q_pochhammer(a_power(1), order) * series_reciprocal(infinite_q_pochhammer(ZLaurent(1), order));
    return std::string();
  });
  for (int n = 0; n <= order && !cx; ++n) {
    cx = probe({{"z_power", n}}, [&] {
      const ZLaurent lhs = q_pochhammer(a_power(1), n) * PRational(PPoly(1), q_factorial(n));
      return diff_of(lhs, rhs[n]);
    });
    if (cx) break;
    // alpha = q: both sides collapse to the geometric series.
    cx = probe({{"z_power", n}, {"alpha", "q"}},
               [&] { return diff_of(specialize_a(rhs[n], PRational::q_power(1)), ZLaurent(1)); });
  }
  return finish("eq27", {{"order", order}},
                "sum (alpha;q)_n z^n/(q;q)_n = (alpha z;q)_inf/(z;q)_inf through z^" + std::to_string(order) +
                    " with alpha formal, and the alpha = q collapse to 1/(1-z)",
                start, std::move(cx));
}

IdentityReport verify_transformation_formula(int n_max, const std::vector<int>& c_powers) {
  const auto start = Clock::now();
  using Param = HypergeometricParameter<ZLaurent>;
  const ZLaurent shape(1);
  std::optional<Counterexample> cx;
  for (int n = 0; n <= n_max && !cx; ++n) {
    for (int j : c_powers) {
      cx = probe({{"n", n}, {"c", "q^" + std::to_string(j)}}, [&] {
        const HypergeometricSpec<ZLaurent> left{
            {Param::q_inverse_power(shape, n), Param::zero(shape)}, {Param::of(ZLaurent(PRational::q_power(j)))}, z(1)};
        const HypergeometricSpec<ZLaurent> right{
            {Param::q_inverse_power(shape, n), Param::of(ZLaurent(PRational::q_power(1 - n - j)))},
            {},
            z(-1) * PRational::q_power(2 * n + j)};
        const PRational pre = sign(n) * PRational(PPoly::q_power(-n * (n + 1) / 2), q_pochhammer_power(4 * j, n));
        return diff_of(basic_hypergeometric(left), z(n) * basic_hypergeometric(right) * pre);
      });
      if (cx) break;
    }
  }
  std::string powers;
  for (int j : c_powers) powers += (powers.empty() ? "" : ",") + std::to_string(j);
  return finish("eq29", {{"n_max", n_max}, {"c_powers", c_powers}},
                "2phi1(q^-n, 0; c | q; z) = (-1)^n q^{-n(n+1)/2} z^n/(c;q)_n 2phi0(q^-n, q^{1-n}/c; - | q; q^{2n} c/z) "
                "for n <= " + std::to_string(n_max) + ", c = q^j, j in {" + powers + "}",
                start, std::move(cx));
}

IdentityReport verify_specialization(Specialization which, int n_max, int gamma_max) {
  const auto start = Clock::now();
  const bool wall = which == Specialization::Eq19Wall;
  const PRational one_minus_q = PRational(1) - PRational::q_power(1);
  std::optional<Counterexample> cx;
  for (int gamma = 0; gamma <= gamma_max && !cx; ++gamma) {
    for (int n = 0; n <= n_max; ++n) {
      cx = probe({{"n", n}, {"gamma", gamma}}, [&] {
        if (wall) {
          const XPoly lhs = scale_argument(P_polynomial(n, {0}, {0}, gamma), -one_minus_q);
          const XPoly rhs = scale_argument(wall_polynomial(n, gamma), PRational(1) - PRational::q_power(-1));
          return diff_of(lhs, rhs);
        }
        const XPoly lhs = P_polynomial(n, {1}, {1}, gamma);
        // m = n + gamma, argument x q^{-(m+n+1)/2}
        const XPoly lag = scale_argument(q_laguerre(n, gamma), PRational::q_power_quarters(-2 * (2 * n + gamma + 1)));
        const PRational pre(q_factorial(n), q_pochhammer_power(4 * (gamma + 1), n));
        return diff_of(lhs, lag * pre);
      });
      if (cx) break;
    }
  }
  Json params = {{"n_max", n_max}, {"gamma_max", gamma_max}};
  std::string checked;
  if (wall) {
    checked = "P_n^{(0,0)}(-(1-q) w; q^gamma | q) = p_n((1-1/q) w; q^gamma | q) as polynomials in w = alpha beta";
  } else {
    params["argument"] = "x*q^(-(m+n+1)/2), m = n + gamma";
    checked = "P_n^{(1/4,1/4)}(x; q^gamma | q) = (q;q)_n/(q^{gamma+1};q)_n L_n^{(gamma)}(x q^{-(m+n+1)/2}; q) with "
              "the power of q multiplying the argument";
  }
  checked += ", n <= " + std::to_string(n_max) + ", 0 <= gamma <= " + std::to_string(gamma_max);
  return finish(wall ? "eq19" : "eq21", std::move(params), checked, start, std::move(cx));
}

IdentityReport verify_eigenfunctions(int order) {
  const auto start = Clock::now();
  std::optional<Counterexample> cx;
  const ZLaurent lambda = a_power(1);
  auto below = [order](const ZLaurent& f) {
    ZLaurent r;
    for (const auto& [k, c] : f.terms()) {
      if (k[0] < order) r.add_term(k, c);
    }
    return r;
  };
  // e_q(lambda z) and E_q(-q lambda z) as polynomials in z through z^order.
  ZLaurent small_e, big_e;
  for (int n = 0; n <= order; ++n) {
    const PRational inv(PPoly(1), q_factorial(n));
    small_e += lambda.pow(n) * z(n) * inv;
    big_e += lambda.pow(n) * z(n) * (inv * sign(n) * PRational::q_power(n * (n + 1) / 2));
  }
  cx = probe({{"operator", "Dz+"}}, [&] {
    return diff_of(below(apply_realization(RealizedOperator::DzPlus, small_e)), below(lambda * small_e));
  });
  if (!cx) {
    cx = probe({{"operator", "Dz-"}}, [&] {
      return diff_of(below(apply_realization(RealizedOperator::DzMinus, big_e)), below(lambda * big_e));
    });
  }
  if (!cx) {
    const ZSeries e = curly_E_q(a_power(1), order);
    for (int n = 0; n <= order && !cx; ++n) {
      cx = probe({{"operator", "tau"}, {"b_power", n}}, [&] {
        const ZLaurent expected = n == 0 ? ZLaurent() : e[n - 1] * a_power(1) * PRational::q_power_quarters(-1);
        return diff_of(apply_realization(RealizedOperator::Tau, e[n]), expected);
      });
    }
  }
  return finish("eigen", {{"order", order}},
                "Dz+ e_q(lambda z) = lambda e_q(lambda z) and Dz- E_q(-q lambda z) = lambda E_q(-q lambda z) through "
                "z^" + std::to_string(order - 1) + "; tau E_q(x;a,b) = a b q^{-1/4} E_q(x;a,b) through b^" +
                    std::to_string(order),
                start, std::move(cx));
}

IdentityReport verify_commutation(int dim) {
  const auto start = Clock::now();
  std::optional<Counterexample> cx;
  cx = probe({{"dim", dim}}, [&]() -> std::string {
    const auto ap = generator_matrix(Generator::APlus, dim).matrix;
    const auto am = generator_matrix(Generator::AMinus, dim).matrix;
    const auto k = generator_matrix(Generator::K, dim).matrix;
    const auto rel = am * ap - (ap * am).scaled(PRational::q_power(-1)) - SparseMatrix<PRational>::identity(dim);
    for (const auto& [ij, v] : rel.entries()) {
      if (ij.first < dim - 1 && ij.second < dim - 1) {
        return "A-A+ - q^-1 A+A- - 1 at (" + std::to_string(ij.first) + "," + std::to_string(ij.second) + "): " + v.str();
      }
    }
    const auto r2 = k * ap - (ap * k).scaled(PRational::q_power_quarters(-2));
    if (!r2.is_zero()) return "K A+ - q^{-1/2} A+ K has " + std::to_string(r2.entries().size()) + " nonzero entries";
    const auto r3 = k * am - (am * k).scaled(PRational::q_power_quarters(2));
    if (!r3.is_zero()) return "K A- - q^{1/2} A- K has " + std::to_string(r3.entries().size()) + " nonzero entries";
    return {};
  });
  return finish("eq1", {{"dim", dim}},
                "A-A+ - q^-1 A+A- = 1 on rows and columns < " + std::to_string(dim - 1) +
                    "; K A+ = q^{-1/2} A+ K and K A- = q^{1/2} A- K on the full " + std::to_string(dim) +
                    "-dimensional truncation",
                start, std::move(cx));
}

IdentityReport verify_realization(int n_max) {
  const auto start = Clock::now();
  std::optional<Counterexample> cx;
  for (int n = 0; n <= n_max && !cx; ++n) {
    const ZLaurent h = continuous_q_hermite(n);
    for (Generator g : {Generator::APlus, Generator::AMinus, Generator::K}) {
      cx = probe({{"n", n}, {"generator", to_string(g)}}, [&] {
        const GeneratorMatrix m = generator_matrix(g, n + 2);
        ZLaurent image;
        for (const auto& [ij, v] : m.matrix.entries()) {
          if (ij.second == n) image += continuous_q_hermite(ij.first) * v;
        }
        return diff_of(apply_realization(g, h), image);
      });
      if (cx) break;
    }
  }
  return finish("eq9", {{"n_max", n_max}},
                "difference-operator realization of A+, A-, K on H_n equals the matrix action with xi_k = H_k for n <= " +
                    std::to_string(n_max),
                start, std::move(cx));
}

IdentityReport verify_matrix_elements(int mn_max) {
  const auto start = Clock::now();
  const int order = 2 * mn_max;
  const int dim = mn_max + order + 1;
  std::optional<Counterexample> cx;
  for (int mu = 0; mu < 4 && !cx; ++mu) {
    for (int nu = 0; nu < 4 && !cx; ++nu) {
      const QuarterExponent qm{mu};
      const QuarterExponent qn{nu};
      const MatrixElementOracle oracle(qm, qn, dim, order);
      for (int m = 0; m <= mn_max && !cx; ++m) {
        for (int n = 0; n <= mn_max; ++n) {
          cx = probe({{"mu", qm.str()}, {"nu", qn.str()}, {"m", m}, {"n", n}},
                     [&] { return diff_of(matrix_element_closed_form(qm, qn, m, n).value, oracle.entry(m, n)); });
          if (cx) break;
        }
      }
    }
  }
  Json params = {{"mn_max", mn_max},
                 {"dim", dim},
                 {"series_order", order},
                 {"lower_prefactor", "q^((m-n)[(mu-1/4)(m-n)-n/2-1/4])"}};
  if (mn_max >= 1) {
    const MatrixElementOracle small({0}, {0}, 4, 2);
    const bool swapped = matrix_element_closed_form({0}, {0}, 1, 0, LowerPrefactor::Swapped).value == small.entry(1, 0);
    params["swapped_lower_prefactor_agrees"] = swapped;
  }
  return finish("eq16", std::move(params),
                "closed-form U_{m,n}^{(mu,nu)}(alpha,beta) equals entry (m,n) of the truncated product "
                "E^{(mu)}((1-q) alpha A+) E^{(nu)}((beta/q)(1-q) A-) for 0 <= m,n <= " +
                    std::to_string(mn_max) +
                    " and mu, nu in {0,1/4,1/2,3/4}; for m > n the prefactor exponent carries the outer factor (m-n), "
                    "the oracle rejects (n-m)",
                start, std::move(cx));
}

VerifyConfig VerifyConfig::uniform(int n_max, int order) {
  VerifyConfig c;
  c.connection_n_max = c.realization_n_max = c.matrix_n_max = c.specialization_n_max = c.transform_n_max = n_max;
  c.gamma_max = n_max;
  c.generating_order = c.eigen_order = c.q_binomial_order = order;
  return c;
}

std::vector<IdentityReport> verify_all(const VerifyConfig& config) {
  std::vector<int> c_powers;
  for (int j = config.transform_n_max + 1; j <= config.transform_n_max + 5; ++j) c_powers.push_back(j);
  const std::vector<std::function<IdentityReport()>> tasks = {
      [&] { return verify_connection_formula(config.connection_n_max, config.hermite); },
      [&] { return verify_generating_function(GeneratingFunction::Eq37, config.generating_order, config.hermite); },
      [&] { return verify_generating_function(GeneratingFunction::Eq40, config.generating_order, config.hermite); },
      [&] { return verify_q_binomial_theorem(config.q_binomial_order); },
      [&] { return verify_transformation_formula(config.transform_n_max, c_powers); },
      [&] { return verify_specialization(Specialization::Eq19Wall, config.specialization_n_max, config.gamma_max); },
      [&] { return verify_specialization(Specialization::Eq21Laguerre, config.specialization_n_max, config.gamma_max); },
      [&] { return verify_eigenfunctions(config.eigen_order); },
      [&] { return verify_commutation(config.commutation_dim); },
      [&] { return verify_realization(config.realization_n_max); },
      [&] { return verify_matrix_elements(config.matrix_n_max); },
  };
  std::vector<IdentityReport> reports(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) reports[i] = tasks[i]();
  };
  const int jobs = std::clamp(config.jobs, 1, static_cast<int>(tasks.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::sort(reports.begin(), reports.end(), [](const IdentityReport& a, const IdentityReport& b) {
    if (a.identity != b.identity) return a.identity < b.identity;
    return a.params.dump() < b.params.dump();
  });
  return reports;
}

}  // namespace qosc
