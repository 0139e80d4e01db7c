#pragma once

#include <vector>

#include "qosc/identity.hpp"
#include "qosc/numeric.hpp"

namespace qosc {

// Physicists' Hermite polynomial by the three-term recurrence.
double classical_hermite(int n, double x);

enum class LimitIdentity {
  Eq6,         // ((1-q)/2)^{-n/2} H_n(x sqrt((1-q)/2) | q) -> H_n(x)
  Eq32,        // H_n(x-a) = sum_k (-1)^{n-k} (2a)^{n-k} C(n,k) H_k(x), no limit
  Eq33,        // ((1-q)/2)^{-n/2} H_n(x sqrt((1-q)/2); a sqrt(2(1-q)) | q) -> H_n(x-a)
  Eq31Shadow,  // right side of the connection formula under the Eq33 scaling -> right side of Eq32
  QExpLimit,   // E_q^{(mu)}((1-q) x) -> e^x
};

std::string to_string(LimitIdentity id);

struct LimitCheckSpec {
  LimitIdentity identity = LimitIdentity::Eq6;
  int n = 0;
  std::vector<double> x_points{-0.9, -0.5, 0.0, 0.5, 0.9};
  double a_value = 0.0;
  std::vector<double> q_sequence{0.9, 0.99, 0.999, 0.9999};
  double tolerance = 1e-2;
  QuarterExponent mu;    // QExpLimit only
  int series_order = 30; // QExpLimit only
};

// The exact element whose value at (q, x, a) approaches the classical target,
// with all powers of (1-q)/2 already applied and cancelled symbolically.
XAPoly limit_form(LimitIdentity id, int n);

// Value of the q-side (or, for Eq32, of the left side) at one point.
double limit_side(LimitIdentity id, int n, double q, double x, double a, QuarterExponent mu = {}, int order = 30);
// Classical target at one point.
double limit_target(LimitIdentity id, int n, double x, double a);

// Passes when every x point has relative error <= tolerance at the last q and
// errors non-increasing over the last three q values. Relative error is taken
// against max(|target|, 1). Throws std::invalid_argument on a malformed spec and
// NumericOverflow on non-finite values.
IdentityReport check_limit(const LimitCheckSpec& spec);

}  // namespace qosc
