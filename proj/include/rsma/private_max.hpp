// SPDX-License-Identifier: Apache-2.0
//
// Maximizes the sum of private rates R_1 + R_2 subject to
// p_c >= tau_sic, p_c + p1 + p2 <= P and kappa in [0,1].
//
// Structure of the optimum: R_k strictly increases in kappa (for lambda > 0)
// and strictly decreases in p_c, so kappa* = 1 and p_c* = tau_sic; R_k also
// strictly increases in own power, so p1 + p2 exhausts P' = P - tau_sic.
// The remaining 1-D power split is found by golden-section search with a
// grid fallback when the objective is detected non-unimodal, then refined
// by bisection on the analytic stationarity condition.

#pragma once

#include <optional>

#include "rsma/rates.hpp"
#include "rsma/scenario.hpp"

namespace rsma::private_max {

struct Solution {
  Allocation alloc;           // kappa = 1 (or the override), p_c = tau_sic
  double objective = 0.0;     // R_1 + R_2 at alloc, bits
  double kkt_residual = 0.0;  // |d(R_1+R_2)/d p1| * max(1, P') at an interior
                              // optimum; active-constraint violation at a boundary
  bool grid_fallback = false; // 1-D search fell back to the dense grid
};

/// Numerically evaluated signs (-1, 0, +1) of the two structural claims:
/// d(R_1+R_2)/d kappa >= 0 and d(R_1+R_2)/d p_c < 0 at kappa = 1.
struct Theorem1Witness {
  int d_obj_d_kappa_sign = 0;
  int d_obj_d_pc_sign = 0;
};

/// Solves the private-rate problem. Throws InfeasibleError when
/// tau_sic > P. `kappa_override` pins the impropriety (used for
/// proper-signaling baselines); the optimum over kappa is 1.
Solution solve(const Scenario& sc, std::optional<double> kappa_override = std::nullopt);

/// Evaluates the monotonicity signs at a given allocation: the kappa slope
/// by central differences, the p_c slope from the analytic derivative.
Theorem1Witness theorem1_witness(const Scenario& sc, const Allocation& alloc);

}  // namespace rsma::private_max
