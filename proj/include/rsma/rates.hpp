// SPDX-License-Identifier: Apache-2.0
//
// Closed-form achievable rates of the two-user rate-splitting link.
//
// Private stream of user k, decoded after imperfect SIC of the common
// stream (residual coefficient lambda, common-stream impropriety kappa):
//
//   R_k = 1/2 log2( 1 + p_k G (2 w + p_k G + 2 p_j G + 2)
//                       / ((w + p_j G + 1)^2 - kappa^2 w^2) ),  w = lambda^2 p_c G
//
// Common stream at user k, decoded first with all private power as noise:
//
//   R_ck = 1/2 log2( (((p_c+p1+p2) G + 1)^2 - kappa^2 p_c^2 G^2)
//                    / ((p1+p2) G + 1)^2 )
//
// All rates are in bits per channel use with the 1/2 log2 prefactor kept
// explicit; G is the user's linear CNR.

#pragma once

#include <algorithm>
#include <cmath>

#include "rsma/scenario.hpp"

namespace rsma {

/// All rates at one allocation. rc = min(rc1, rc2); r_tot = r1 + r2 + rc.
struct RateReport {
  double r1 = 0.0;
  double r2 = 0.0;
  double rc1 = 0.0;
  double rc2 = 0.0;
  double rc = 0.0;
  double r_tot = 0.0;
};

/// Intermediate factors of the d R_k / d p_c closed form, exposed so tests
/// can probe monotonicity claims. a2 > 0 for kappa <= 1 and u >= 1 always;
/// R_k = 1/2 log2(u).
struct DerivativeParts {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double u = 1.0;
};

struct PrivateRateSlope {
  double value = 0.0;  // bits per unit of common power
  DerivativeParts parts;
};

namespace detail {

// Denominators can only collapse through invalid inputs (kappa > 1); treat
// that as a domain error rather than returning infinity.
constexpr double kDenominatorFloor = 1e-300;

inline void check_rate_args(double gamma_k, double p_k, double p_j, double p_c, double lambda, double kappa) {
  expect(finite(gamma_k) && gamma_k > 0.0, "rate: gamma_k must be positive and finite");
  expect(finite(p_k) && p_k >= 0.0, "rate: p_k must be nonnegative");
  expect(finite(p_j) && p_j >= 0.0, "rate: p_j must be nonnegative");
  expect(finite(p_c) && p_c >= 0.0, "rate: p_c must be nonnegative");
  expect(finite(lambda) && lambda >= 0.0 && lambda <= 1.0, "rate: lambda must lie in [0,1]");
  expect(finite(kappa) && kappa >= 0.0 && kappa <= 1.0, "rate: kappa must lie in [0,1]");
}

// Unchecked kernels; preconditions are the caller's responsibility.

inline double private_rate_raw(double g, double p_k, double p_j, double p_c, double lambda, double kappa) {
  const double w = lambda * lambda * p_c * g;
  const double c = p_j * g + 1.0;
  const double num = p_k * g * (2.0 * w + p_k * g + 2.0 * p_j * g + 2.0);
  const double den = (w + c) * (w + c) - kappa * kappa * w * w;
  if (!(den > kDenominatorFloor)) throw std::domain_error("private_rate: singular interference denominator");
  return 0.5 * std::log2(1.0 + num / den);
}

inline double common_rate_raw(double g, double p_c, double p1, double p2, double kappa) {
  const double tot = (p_c + p1 + p2) * g + 1.0;
  const double base = (p1 + p2) * g + 1.0;
  const double kpg = kappa * p_c * g;
  return 0.5 * std::log2((tot * tot - kpg * kpg) / (base * base));
}

inline PrivateRateSlope private_rate_dpc_raw(double g, double p_k, double p_j, double p_c, double lambda,
                                             double kappa) {
  const double l2 = lambda * lambda;
  const double w = l2 * p_c * g;
  const double c = p_j * g + 1.0;
  PrivateRateSlope out;
  out.parts.a1 = 2.0 * w + p_k * g + 2.0 * p_j * g + 2.0;
  out.parts.a2 = (w + c) * (w + c) - kappa * kappa * w * w;
  out.parts.a3 = (w + c) - kappa * kappa * w;
  if (!(out.parts.a2 > kDenominatorFloor)) throw std::domain_error("private_rate_dpc: singular denominator");
  out.parts.u = 1.0 + p_k * g * out.parts.a1 / out.parts.a2;
  out.value = l2 * p_k * g * g * (out.parts.a2 - out.parts.a1 * out.parts.a3) /
              (out.parts.u * out.parts.a2 * out.parts.a2 * std::log(2.0));
  return out;
}

}  // namespace detail

/// Private rate of user k (bits). p_j is the other user's private power.
inline double private_rate(double gamma_k, double p_k, double p_j, double p_c, double lambda, double kappa) {
  detail::check_rate_args(gamma_k, p_k, p_j, p_c, lambda, kappa);
  return detail::private_rate_raw(gamma_k, p_k, p_j, p_c, lambda, kappa);
}

/// Common-stream rate as decoded by user k (bits).
inline double common_rate_k(double gamma_k, double p_c, double p1, double p2, double kappa) {
  detail::check_rate_args(gamma_k, p1, p2, p_c, 0.0, kappa);
  return detail::common_rate_raw(gamma_k, p_c, p1, p2, kappa);
}

/// Analytic d R_k / d p_c with its intermediate factors.
inline PrivateRateSlope private_rate_dpc(double gamma_k, double p_k, double p_j, double p_c, double lambda,
                                         double kappa) {
  detail::check_rate_args(gamma_k, p_k, p_j, p_c, lambda, kappa);
  return detail::private_rate_dpc_raw(gamma_k, p_k, p_j, p_c, lambda, kappa);
}

/// Analytic d R_k / d p_k (own private power).
inline double private_rate_dpk(double gamma_k, double p_k, double p_j, double p_c, double lambda, double kappa) {
  detail::check_rate_args(gamma_k, p_k, p_j, p_c, lambda, kappa);
  const double g = gamma_k;
  const double w = lambda * lambda * p_c * g;
  const double c = p_j * g + 1.0;
  const double den = (w + c) * (w + c) - kappa * kappa * w * w;
  const double num = p_k * g * (2.0 * w + p_k * g + 2.0 * p_j * g + 2.0);
  const double dnum = g * (2.0 * w + 2.0 * p_k * g + 2.0 * p_j * g + 2.0);
  const double u = 1.0 + num / den;
  return dnum / den / (2.0 * std::log(2.0) * u);
}

/// Analytic d R_k / d p_j (interfering private power).
inline double private_rate_dpj(double gamma_k, double p_k, double p_j, double p_c, double lambda, double kappa) {
  detail::check_rate_args(gamma_k, p_k, p_j, p_c, lambda, kappa);
  const double g = gamma_k;
  const double w = lambda * lambda * p_c * g;
  const double c = p_j * g + 1.0;
  const double den = (w + c) * (w + c) - kappa * kappa * w * w;
  const double num = p_k * g * (2.0 * w + p_k * g + 2.0 * p_j * g + 2.0);
  const double dnum = 2.0 * p_k * g * g;
  const double dden = 2.0 * (w + c) * g;
  const double u = 1.0 + num / den;
  return (dnum * den - num * dden) / (den * den) / (2.0 * std::log(2.0) * u);
}

/// Evaluates every rate of the link at one allocation.
inline RateReport full_report(const Scenario& sc, const Allocation& a) {
  const double g1 = sc.channel.gamma1;
  const double g2 = sc.channel.gamma2;
  const double l = sc.sic.lambda;
  const double k = a.kappa;
  RateReport r;
  r.r1 = detail::private_rate_raw(g1, a.p1, a.p2, a.p_c, l, k);
  r.r2 = detail::private_rate_raw(g2, a.p2, a.p1, a.p_c, l, k);
  r.rc1 = detail::common_rate_raw(g1, a.p_c, a.p1, a.p2, k);
  r.rc2 = detail::common_rate_raw(g2, a.p_c, a.p1, a.p2, k);
  r.rc = std::min(r.rc1, r.rc2);
  r.r_tot = r.r1 + r.r2 + r.rc;
  return r;
}

}  // namespace rsma
