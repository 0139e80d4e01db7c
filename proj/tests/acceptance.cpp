// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <cmath>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "qosc/identity.hpp"
#include "qosc/limits.hpp"

using namespace qosc;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
  void require(const IdentityReport& r) {
    std::string what = r.identity + " " + r.params.dump();
    if (r.counterexample) what += " at " + r.counterexample->at.dump() + ": " + r.counterexample->difference;
    require(r.pass, what);
  }
};

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

HermiteProvider corrupted_h5() {
  return [](int n) {
    ZLaurent h = continuous_q_hermite(n);
    if (n == 5) h.add_term({3, 0}, PRational(1));
    return h;
  };
}

Outcome connection() {
  Outcome o;
  o.require(verify_connection_formula(12));
  return o;
}

Outcome generating_functions() {
  Outcome o;
  o.require(verify_generating_function(GeneratingFunction::Eq37, 16));
  o.require(verify_generating_function(GeneratingFunction::Eq40, 16));
  return o;
}

Outcome commutation() {
  Outcome o;
  o.require(verify_commutation(32));
  return o;
}

Outcome realization() {
  Outcome o;
  o.require(verify_realization(20));
  return o;
}

Outcome matrix_elements() {
  Outcome o;
  const IdentityReport r = verify_matrix_elements(8);
  o.require(r);
  // The lower-triangle prefactor with the opposite sign must be rejected by the oracle.
  o.require(r.params.value("swapped_lower_prefactor_agrees", true) == false, "opposite orientation not rejected");
  MatrixElementOracle oracle({0}, {0}, 4, 2);
  o.require(!(matrix_element_closed_form({0}, {0}, 1, 0, LowerPrefactor::Swapped).value == oracle.entry(1, 0)),
            "opposite orientation agrees with the oracle at (1, 0)");
  if (o.pass) o.detail = "lower prefactor " + r.params["lower_prefactor"].get<std::string>();
  return o;
}

Outcome specializations() {
  Outcome o;
  o.require(verify_specialization(Specialization::Eq19Wall, 10, 4));
  o.require(verify_specialization(Specialization::Eq21Laguerre, 10, 4));
  return o;
}

Outcome eigenfunctions() {
  Outcome o;
  o.require(verify_eigenfunctions(12));
  return o;
}

Outcome series_identities() {
  Outcome o;
  o.require(verify_q_binomial_theorem(12));
  o.require(verify_transformation_formula(8, range(9, 13)));
  return o;
}

Outcome limits() {
  Outcome o;
  for (LimitIdentity id : {LimitIdentity::Eq6, LimitIdentity::Eq33, LimitIdentity::Eq31Shadow}) {
    for (double a : {0.0, 0.3}) {
      for (int n = 0; n <= 6; ++n) {
        LimitCheckSpec s;
        s.identity = id;
        s.n = n;
        s.a_value = a;
        o.require(check_limit(s));
      }
    }
  }
  for (int mu = 0; mu < 4; ++mu) {
    LimitCheckSpec s;
    s.identity = LimitIdentity::QExpLimit;
    s.mu = {mu};
    o.require(check_limit(s));
  }
  for (int n = 0; n <= 8; ++n) {
    for (double a : {-0.7, 0.0, 0.3}) {
      LimitCheckSpec s;
      s.identity = LimitIdentity::Eq32;
      s.n = n;
      s.a_value = a;
      s.tolerance = 1e-10;
      o.require(check_limit(s));
    }
  }
  return o;
}

Outcome fault_injection() {
  Outcome o;
  const HermiteProvider bad = corrupted_h5();
  const IdentityReport r31 = verify_connection_formula(12, bad);
  o.require(!r31.pass && r31.counterexample && r31.counterexample->at.value("n", -1) == 5,
            "eq31 did not localize the fault at n = 5");
  o.require(!connection_difference(5, bad).is_zero(), "eq31 replay at n = 5 is zero");
  for (GeneratingFunction g : {GeneratingFunction::Eq37, GeneratingFunction::Eq40}) {
    const IdentityReport r = verify_generating_function(g, 16, bad);
    o.require(!r.pass && r.counterexample && r.counterexample->at.value("t_power", -1) == 5,
              r.identity + " did not localize the fault at t^5");
    o.require(!(generating_function_lhs(g, 5)[5] - generating_function_rhs_coeff(g, 5, bad)).is_zero(),
              r.identity + " replay at t^5 is zero");
  }
  if (o.pass) o.detail = "eq31 at " + r31.counterexample->at.dump() + ": " + r31.counterexample->difference;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"connection formula, n <= 12, with operator replay", connection},
      {"generating functions eq37/eq40 to order 16", generating_functions},
      {"commutation relations at D = 32", commutation},
      {"z-realization for n <= 20", realization},
      {"matrix elements for m, n <= 8", matrix_elements},
      {"Wall and q-Laguerre specializations, n <= 10, gamma <= 4", specializations},
      {"eigenfunctions to order 12", eigenfunctions},
      {"q-binomial theorem to order 12, transformation for n <= 8", series_identities},
      {"classical limits", limits},
      {"fault injection on H_5", fault_injection},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << ": " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
    if (!o.pass) ++failed;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
