// SPDX-License-Identifier: Apache-2.0
//
// Maximizes the common rate R_c = min(R_c1, R_c2) over (kappa, p_c) for a
// fixed private split (p1, p2), subject to R_1, R_2 >= r_min,
// tau_sic <= p_c and p_c + p1 + p2 <= P.
//
// With gamma1 >= gamma2 the objective reduces to R_c2. At the optimum one
// private-rate constraint binds (or the budget does); the binding condition
// R_k = r_min is a quadratic in p_c,
//
//   b1 p_c^2 + b2 p_c + b3 = 0,   S = 2^(2 r_min) - 1,
//   b1 = S l^4 G^2 (1 - kappa^2)
//   b2 = 2 l^2 G (S (p_j G + 1) - p_k G)
//   b3 = S (p_j G + 1)^2 - p_k G (p_k G + 2 p_j G + 2)
//
// (G = Gamma_k of the binding user, l the SIC residual coefficient), whose
// unique positive root p_c(kappa) is increasing in kappa. Substituting the
// root into R_c2 leaves an expression affine in p_c(kappa); its slope sign,
// the monotonicity indicator M, selects the optimal kappa in closed form.

#pragma once

#include "rsma/rates.hpp"
#include "rsma/scenario.hpp"

namespace rsma::common_max {

/// The binding equation degenerates (not quadratic in p_c) when lambda = 0
/// or r_min = 0; those regimes are handled directly by solve().
class DegenerateRegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The binding quadratic has no positive root: either the binding user sits
/// below r_min for every p_c (b3 >= 0), or the constraint never binds at
/// this kappa (b1 = 0 with b2 <= 0).
class NoPositiveRootError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct QuadraticCoeffs {
  double s = 0.0;   // SNR threshold 2^(2 r_min) - 1
  double b1 = 0.0;  // coefficient of p_c^2; zero iff kappa = 1
  double b2 = 0.0;
  double b3 = 0.0;
  int binding_user = 2;
};

/// Sign of d R_c2 / d kappa along the binding manifold of the given case.
struct MonotonicityIndicator {
  int case_id = 2;     // which user's rate constraint binds
  double value = 0.0;  // M; positive means R_c2 grows with kappa
  double c = 0.0;      // C_k = (p1 + p2) Gamma_k + 1 of the binding case
};

enum class Branch {
  none,          // infeasible
  kappa_one,     // M > 0 and the kappa = 1 binding point fits the budget
  budget_bound,  // M > 0, binding pinned to p_c = D by the power budget
  kappa_zero,    // M <= 0, binding point at kappa = 0
  kappa_floor,   // M <= 0 but the kappa = 0 root lies below tau_sic;
                 // kappa rises to the smallest value binding at p_c = tau_sic
  rate_slack,    // r_min = 0: constraints never bind, kappa = 0, p_c = D
  perfect_sic,   // lambda = 0: private rates independent of (kappa, p_c)
};

struct Solution {
  bool feasible = false;
  int binding_user = 0;
  double kappa_star = 0.0;
  double p_c_star = 0.0;
  double rc = 0.0;  // achieved common rate, bits
  Branch branch = Branch::none;
  RateReport report;  // all rates at the returned allocation
};

/// Best common rate when kappa is pinned (proper-signaling baselines and
/// rate-versus-kappa sweeps).
struct FixedKappaSolution {
  bool feasible = false;
  double p_c = 0.0;
  double rc = 0.0;
};

/// Coefficients of the binding quadratic for the chosen binding user.
/// Throws DegenerateRegimeError when lambda = 0 or r_min = 0.
QuadraticCoeffs quad_coeffs(const Scenario& sc, double p1, double p2, int binding_user, double kappa);

/// Unique positive root of the binding quadratic. Throws NoPositiveRootError
/// when none exists. Returns +infinity when the constraint never binds at
/// kappa = 1 (b1 = 0, b2 <= 0, b3 < 0).
double pc_of_kappa(const QuadraticCoeffs& q);

struct KappaSq {
  double value = 0.0;  // kappa^2 that makes the binding hold at the given p_c
  bool in_range = false;
};

/// Inverts the binding condition for kappa^2 at a given p_c.
KappaSq kappa_of_pc(const Scenario& sc, double p1, double p2, int binding_user, double p_c);

/// Slope indicator of R_c2 along the binding manifold of the given case.
MonotonicityIndicator monotonicity(const Scenario& sc, double p1, double p2, int case_id);

/// Full closed-form solve over both binding cases. Requires p1 + p2 < P.
/// Candidates violating either user's rate floor mark that case infeasible;
/// the returned case is the one with the larger R_c2 (ties to case 2).
Solution solve(const Scenario& sc, double p1, double p2);

/// Closed-form best p_c at a pinned kappa (the smallest of the budget and
/// the two binding roots, if it clears tau_sic).
FixedKappaSolution solve_fixed_kappa(const Scenario& sc, double p1, double p2, double kappa);

}  // namespace rsma::common_max
