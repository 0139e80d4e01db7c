#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qosc/oscillator.hpp"

namespace qosc {

using Json = nlohmann::json;

// Where a verifier found a nonzero difference, and what it was.
struct Counterexample {
  Json at;  // parameter point, e.g. {"n": 5}
  std::string difference;
};

struct IdentityReport {
  std::string identity;
  Json params = Json::object();
  bool pass = true;
  std::string checked;
  std::optional<Counterexample> counterexample;
  long elapsed_ms = 0;
};

Json to_json(const IdentityReport& r);
std::string to_text(const IdentityReport& r);

// Source of H_n(x|q) for the verifiers. Tests swap in corrupted tables.
using HermiteProvider = std::function<ZLaurent(int)>;
HermiteProvider standard_hermite();

// H_n(x;a|q) - sum_k (-1)^k a^k q^{k(k-1)/2} [n k]_q H_{n-k}(x|q)
ZLaurent connection_difference(int n, const HermiteProvider& hermite);

// (a/z;q)_n z^n 2phi1(q^-n, 0; q^{1-n} z/a | q; q/(a z)), cleared of 1/a.
ZLaurent resummed_action(int n);

enum class GeneratingFunction { Eq37, Eq40 };
// Left side as a series in t; right-side t^n coefficient from `hermite`.
ZSeries generating_function_lhs(GeneratingFunction which, int order);
ZLaurent generating_function_rhs_coeff(GeneratingFunction which, int n, const HermiteProvider& hermite);

IdentityReport verify_connection_formula(int n_max, const HermiteProvider& hermite = standard_hermite());
IdentityReport verify_generating_function(GeneratingFunction which, int order,
                                          const HermiteProvider& hermite = standard_hermite());
IdentityReport verify_q_binomial_theorem(int order);
IdentityReport verify_transformation_formula(int n_max, const std::vector<int>& c_powers);

enum class Specialization { Eq19Wall, Eq21Laguerre };
IdentityReport verify_specialization(Specialization which, int n_max, int gamma_max);

IdentityReport verify_eigenfunctions(int order);
IdentityReport verify_commutation(int dim);
IdentityReport verify_realization(int n_max);
IdentityReport verify_matrix_elements(int mn_max);

struct VerifyConfig {
  int connection_n_max = 12;
  int generating_order = 16;
  int commutation_dim = 32;
  int realization_n_max = 20;
  int matrix_n_max = 8;
  int specialization_n_max = 10;
  int gamma_max = 4;
  int eigen_order = 12;
  int q_binomial_order = 12;
  int transform_n_max = 8;
  int jobs = 1;
  HermiteProvider hermite = standard_hermite();

  // Every degree bound set to n_max and every series order to order.
  static VerifyConfig uniform(int n_max, int order);
};

// All verifiers, sorted by identity id. jobs > 1 runs them on that many
// threads; the result does not depend on it.
std::vector<IdentityReport> verify_all(const VerifyConfig& config);

}  // namespace qosc
