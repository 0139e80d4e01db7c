#include "qosc/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <optional>

#include "qosc/limits.hpp"

namespace qosc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int n = 0;
  int m = 0;
  int gamma = 0;
  std::string mu = "0";
  std::string nu = "0";
  std::optional<int> order;
  std::optional<int> n_max;
  std::optional<int> gamma_max;
  std::optional<int> dim;
  std::optional<double> q;
  std::optional<double> x;
  std::optional<double> a;
  std::string identity;
  std::string format = "text";
  int jobs = 1;
};

const std::vector<std::string> kQuarterStrings{"0", "1/4", "1/2", "3/4"};
const std::vector<std::string> kIdentities{"eigen", "eq1", "eq16", "eq19", "eq21", "eq27",
                                           "eq29", "eq31", "eq37", "eq40", "eq9"};
const std::vector<std::string> kLimitIdentities{"eq6", "eq32", "eq33", "eq31_shadow", "qexp_limit"};

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void require_q(const Config& c) {
  if (c.q && !(*c.q > 0 && *c.q < 1)) throw UsageError("--q must lie in (0, 1)");
}

// Prints a constructed object, with its numeric value when --q is given.
void emit_object(const Config& c, std::ostream& out, const std::string& kind, Json params, const std::string& value,
                 const std::function<double()>& numeric) {
  std::optional<double> v;
  if (c.q) v = numeric();
  if (c.format == "json") {
    Json j = {{"object", kind}, {"params", std::move(params)}, {"value", value}};
    if (v) j["numeric"] = {{"q", *c.q}, {"x", c.x.value_or(0.0)}, {"a", c.a.value_or(0.0)}, {"value", *v}};
    out << j.dump(2) << "\n";
    return;
  }
  out << value << "\n";
  if (v) {
    out << "at q=" << number(*c.q) << " x=" << number(c.x.value_or(0.0));
    if (c.a) out << " a=" << number(*c.a);
    out << ": " << number(*v) << "\n";
  }
}

XAPoly as_xa(const XPoly& f) {
  XAPoly r;
  for (const auto& [k, c] : f.terms()) r.add_term({k[0], 0}, c);
  return r;
}

int emit_reports(const Config& c, std::ostream& out, const std::vector<IdentityReport>& reports, bool single) {
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;
  if (c.format == "json") {
    if (single) {
      out << to_json(reports.front()).dump(2) << "\n";
    } else {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out << arr.dump(2) << "\n";
    }
  } else {
    for (const auto& r : reports) out << to_text(r);
  }
  return all_pass ? kOk : kVerificationFailed;
}

IdentityReport verify_one(const Config& c) {
  const VerifyConfig d;
  const std::string& id = c.identity;
  if (id == "eq31") return verify_connection_formula(c.n_max.value_or(d.connection_n_max));
  if (id == "eq37") return verify_generating_function(GeneratingFunction::Eq37, c.order.value_or(d.generating_order));
  if (id == "eq40") return verify_generating_function(GeneratingFunction::Eq40, c.order.value_or(d.generating_order));
  if (id == "eq27") return verify_q_binomial_theorem(c.order.value_or(d.q_binomial_order));
  if (id == "eq29") {
    const int n_max = c.n_max.value_or(d.transform_n_max);
    std::vector<int> powers;
    for (int j = n_max + 1; j <= n_max + 5; ++j) powers.push_back(j);
    return verify_transformation_formula(n_max, powers);
  }
  if (id == "eq19" || id == "eq21") {
    return verify_specialization(id == "eq19" ? Specialization::Eq19Wall : Specialization::Eq21Laguerre,
                                 c.n_max.value_or(d.specialization_n_max), c.gamma_max.value_or(d.gamma_max));
  }
  if (id == "eigen") return verify_eigenfunctions(c.order.value_or(d.eigen_order));
  if (id == "eq1") return verify_commutation(c.dim.value_or(d.commutation_dim));
  if (id == "eq9") return verify_realization(c.n_max.value_or(d.realization_n_max));
  return verify_matrix_elements(c.n_max.value_or(d.matrix_n_max));  // eq16
}

LimitIdentity limit_identity(const std::string& s) {
  if (s == "eq6") return LimitIdentity::Eq6;
  if (s == "eq32") return LimitIdentity::Eq32;
  if (s == "eq33") return LimitIdentity::Eq33;
  if (s == "eq31_shadow") return LimitIdentity::Eq31Shadow;
  return LimitIdentity::QExpLimit;
}

std::vector<IdentityReport> default_limit_reports() {
  std::vector<IdentityReport> out;
  for (LimitIdentity id : {LimitIdentity::Eq6, LimitIdentity::Eq33, LimitIdentity::Eq31Shadow}) {
    for (double a : {0.0, 0.3}) {
      if (id == LimitIdentity::Eq6 && a != 0.0) continue;
      for (int n = 0; n <= 6; ++n) {
        LimitCheckSpec s;
        s.identity = id;
        s.n = n;
        s.a_value = a;
        out.push_back(check_limit(s));
      }
    }
  }
  for (int n = 0; n <= 8; ++n) {
    LimitCheckSpec s;
    s.identity = LimitIdentity::Eq32;
    s.n = n;
    s.a_value = 0.3;
    s.tolerance = 1e-10;
    out.push_back(check_limit(s));
  }
  for (int mu = 0; mu < 4; ++mu) {
    LimitCheckSpec s;
    s.identity = LimitIdentity::QExpLimit;
    s.mu = {mu};
    out.push_back(check_limit(s));
  }
  return out;
}

int dispatch(const std::string& sub, const Config& c, std::ostream& out) {
  require_q(c);
  if (sub == "hermite") {
    return emit_object(c, out, "hermite", {{"n", c.n}}, continuous_q_hermite(c.n).str(),
                       [&] { return substitute_numeric_real_x(continuous_q_hermite(c.n), *c.q, c.x.value_or(0.0)); }),
           kOk;
  }
  if (sub == "big-hermite") {
    const ZLaurent h = continuous_big_q_hermite(c.n);
    return emit_object(c, out, "big-hermite", {{"n", c.n}}, h.str(),
                       [&] { return substitute_numeric_real_x(h, *c.q, c.x.value_or(0.0), c.a.value_or(0.0)); }),
           kOk;
  }
  if (sub == "wall" || sub == "laguerre") {
    const XPoly f = sub == "wall" ? wall_polynomial(c.n, c.gamma) : q_laguerre(c.n, c.gamma);
    return emit_object(c, out, sub, {{"n", c.n}, {"gamma", c.gamma}}, f.str(),
                       [&] { return substitute_numeric(as_xa(f), *c.q, c.x.value_or(0.0)); }),
           kOk;
  }
  if (sub == "matrix-element") {
    const QuarterExponent mu = QuarterExponent::parse(c.mu);
    const QuarterExponent nu = QuarterExponent::parse(c.nu);
    const MatrixElementResult r = matrix_element_closed_form(mu, nu, c.m, c.n);
    if (c.format == "json") {
      out << Json{{"object", "matrix-element"},
                  {"params", {{"m", c.m}, {"n", c.n}, {"mu", mu.str()}, {"nu", nu.str()}}},
                  {"value", r.value.str()}}
                 .dump(2)
          << "\n";
    } else {
      out << r.value.str() << "\n";
    }
    return kOk;
  }
  if (sub == "verify") return emit_reports(c, out, {verify_one(c)}, true);
  if (sub == "limit") {
    LimitCheckSpec s;
    s.identity = limit_identity(c.identity);
    s.n = c.n;
    s.a_value = c.a.value_or(0.0);
    if (c.x) s.x_points = {*c.x};
    if (s.identity == LimitIdentity::Eq32) s.tolerance = 1e-10;
    s.mu = QuarterExponent::parse(c.mu);
    if (c.order) s.series_order = *c.order;
    return emit_reports(c, out, {check_limit(s)}, true);
  }
  // all
  VerifyConfig vc;
  if (c.n_max) {
    const VerifyConfig u = VerifyConfig::uniform(*c.n_max, 0);
    vc.connection_n_max = u.connection_n_max;
    vc.realization_n_max = u.realization_n_max;
    vc.matrix_n_max = u.matrix_n_max;
    vc.specialization_n_max = u.specialization_n_max;
    vc.transform_n_max = u.transform_n_max;
    vc.gamma_max = u.gamma_max;
  }
  if (c.gamma_max) vc.gamma_max = *c.gamma_max;
  if (c.order) vc.generating_order = vc.eigen_order = vc.q_binomial_order = *c.order;
  if (c.dim) vc.commutation_dim = *c.dim;
  vc.jobs = c.jobs;
  std::vector<IdentityReport> reports = verify_all(vc);
  for (auto& r : default_limit_reports()) reports.push_back(std::move(r));
  return emit_reports(c, out, reports, false);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-oscillator special functions and identity verification", "qosc"};
  app.require_subcommand(1);
  Config c;

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_numeric = [&](CLI::App* s) {
    s->add_option("--q", c.q, "Evaluate at this q in (0, 1)");
    s->add_option("--x", c.x, "x = cos(theta) for numeric evaluation");
  };
  const auto nonneg = CLI::NonNegativeNumber;

  CLI::App* hermite = app.add_subcommand("hermite", "Continuous q-Hermite H_n(x|q) as a Laurent polynomial in z");
  hermite->add_option("--n", c.n, "Degree")->required()->check(nonneg);
  add_numeric(hermite);
  add_format(hermite);

  CLI::App* big = app.add_subcommand("big-hermite", "Continuous big q-Hermite H_n(x;a|q), a formal");
  big->add_option("--n", c.n, "Degree")->required()->check(nonneg);
  add_numeric(big);
  big->add_option("--a", c.a, "Value of a for numeric evaluation");
  add_format(big);

  CLI::App* wall = app.add_subcommand("wall", "Wall polynomial p_n(x; q^gamma | q)");
  CLI::App* laguerre = app.add_subcommand("laguerre", "q-Laguerre L_n^{(gamma)}(x; q)");
  for (CLI::App* s : {wall, laguerre}) {
    s->add_option("--n", c.n, "Degree")->required()->check(nonneg);
    s->add_option("--gamma", c.gamma, "Parameter exponent (>= 0)")->check(nonneg);
    add_numeric(s);
    add_format(s);
  }

  CLI::App* me = app.add_subcommand("matrix-element", "Closed-form U_{m,n}^{(mu,nu)}(alpha, beta)");
  me->add_option("--m", c.m, "Row index")->required()->check(nonneg);
  me->add_option("--n", c.n, "Column index")->required()->check(nonneg);
  me->add_option("--mu", c.mu, "0, 1/4, 1/2 or 3/4")->check(CLI::IsMember(kQuarterStrings));
  me->add_option("--nu", c.nu, "0, 1/4, 1/2 or 3/4")->check(CLI::IsMember(kQuarterStrings));
  add_format(me);

  CLI::App* verify = app.add_subcommand("verify", "Verify one identity exactly");
  verify->add_option("--identity", c.identity, "Identity id")->required()->check(CLI::IsMember(kIdentities));
  verify->add_option("--n-max", c.n_max, "Degree bound")->check(nonneg);
  verify->add_option("--order", c.order, "Series order")->check(nonneg);
  verify->add_option("--gamma-max", c.gamma_max, "gamma bound for eq19/eq21")->check(nonneg);
  verify->add_option("--dim", c.dim, "Truncation dimension for eq1")->check(CLI::Range(2, 1 << 16));
  add_format(verify);

  CLI::App* limit = app.add_subcommand("limit", "Numeric q -> 1 limit check");
  limit->add_option("--identity", c.identity, "Limit id")->required()->check(CLI::IsMember(kLimitIdentities));
  limit->add_option("--n", c.n, "Degree")->check(CLI::Range(0, 8));
  limit->add_option("--x", c.x, "Single x point (default -0.9,-0.5,0,0.5,0.9)");
  limit->add_option("--a", c.a, "a for eq32/eq33/eq31_shadow");
  limit->add_option("--mu", c.mu, "mu for qexp_limit")->check(CLI::IsMember(kQuarterStrings));
  limit->add_option("--order", c.order, "Series order for qexp_limit")->check(nonneg);
  add_format(limit);

  CLI::App* all = app.add_subcommand("all", "Run every verifier and the default limit checks");
  all->add_option("--n-max", c.n_max, "Override every degree bound")->check(nonneg);
  all->add_option("--order", c.order, "Override every series order")->check(nonneg);
  all->add_option("--gamma-max", c.gamma_max, "gamma bound for eq19/eq21")->check(nonneg);
  all->add_option("--dim", c.dim, "Truncation dimension for eq1")->check(CLI::Range(2, 1 << 16));
  all->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_format(all);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), c, out);
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace qosc::cli
