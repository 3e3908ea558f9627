// SPDX-License-Identifier: Apache-2.0

#include "rsma/private_max.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace rsma::private_max {

namespace {

struct SplitObjective {
  const Scenario& sc;
  double p_prime;
  double kappa;

  double value(double p1) const {
    const double p2 = p_prime - p1;
    return detail::private_rate_raw(sc.channel.gamma1, p1, p2, sc.tau_sic, sc.sic.lambda, kappa) +
           detail::private_rate_raw(sc.channel.gamma2, p2, p1, sc.tau_sic, sc.sic.lambda, kappa);
  }

  // d(R_1 + R_2)/d p1 with p2 = P' - p1.
  double slope(double p1) const {
    const double p2 = p_prime - p1;
    const double g1 = sc.channel.gamma1;
    const double g2 = sc.channel.gamma2;
    const double l = sc.sic.lambda;
    return private_rate_dpk(g1, p1, p2, sc.tau_sic, l, kappa) -
           private_rate_dpj(g1, p1, p2, sc.tau_sic, l, kappa) -
           private_rate_dpk(g2, p2, p1, sc.tau_sic, l, kappa) +
           private_rate_dpj(g2, p2, p1, sc.tau_sic, l, kappa);
  }
};

double golden_max(const SplitObjective& f, double lo, double hi, double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = f.value(x1);
  double f2 = f.value(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = f.value(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = f.value(x1);
    }
  }
  return 0.5 * (lo + hi);
}

// Bisection on the stationarity condition inside a sign-change bracket
// around x0, if one exists nearby.
double refine_stationary(const SplitObjective& f, double x0, double p_prime) {
  double delta = std::max(1e-9, 1e-6 * p_prime);
  double lo = x0, hi = x0;
  double slo = f.slope(x0), shi = slo;
  for (int i = 0; i < 60 && slo * shi >= 0.0; ++i) {
    lo = std::max(0.0, x0 - delta);
    hi = std::min(p_prime, x0 + delta);
    slo = f.slope(lo);
    shi = f.slope(hi);
    if (lo == 0.0 && hi == p_prime) break;
    delta *= 2.0;
  }
  if (!(slo > 0.0 && shi < 0.0)) return x0;  // no interior bracket; keep search result
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double s = f.slope(mid);
    if (s > 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-15 * std::max(1.0, p_prime)) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

Solution solve(const Scenario& sc, std::optional<double> kappa_override) {
  if (sc.tau_sic > sc.power_budget) throw InfeasibleError("private_max: tau_sic exceeds the power budget");
  const double kappa = kappa_override.value_or(1.0);
  detail::expect(kappa >= 0.0 && kappa <= 1.0, "private_max: kappa override must lie in [0,1]");

  const double p_prime = sc.power_budget - sc.tau_sic;
  Solution out;
  if (p_prime <= 0.0) {
    out.alloc = Allocation(sc.tau_sic, 0.0, 0.0, kappa);
    out.objective = 0.0;
    out.kkt_residual = 0.0;
    return out;
  }

  const SplitObjective f{sc, p_prime, kappa};
  const double tol = 1e-11 * std::max(1.0, p_prime);
  double x = golden_max(f, 0.0, p_prime, tol);
  double fx = f.value(x);

  // Golden section assumes a unimodal objective; a coarse scan that beats it
  // signals multiple modes and triggers the dense-grid fallback.
  bool fallback = false;
  {
    const int n_scan = 129;
    for (int i = 0; i < n_scan; ++i) {
      const double xi = p_prime * i / (n_scan - 1.0);
      if (f.value(xi) > fx + 1e-9 * std::max(1.0, std::abs(fx))) {
        fallback = true;
        break;
      }
    }
  }
  if (fallback) {
    const int n = 4097;
    int best = 0;
    double best_v = f.value(0.0);
    for (int i = 1; i < n; ++i) {
      const double v = f.value(p_prime * i / (n - 1.0));
      if (v > best_v) {
        best_v = v;
        best = i;
      }
    }
    const double lo = p_prime * std::max(0, best - 1) / (n - 1.0);
    const double hi = p_prime * std::min(n - 1, best + 1) / (n - 1.0);
    x = golden_max(f, lo, hi, tol);
    fx = f.value(x);
  }

  x = refine_stationary(f, x, p_prime);
  fx = f.value(x);

  // Boundary candidates; exact ties break toward the interior point and,
  // between the two boundaries, toward giving the stronger user the power.
  const double f0 = f.value(0.0);
  const double fP = f.value(p_prime);
  double best_x = x;
  double best_v = fx;
  if (fP > best_v + 1e-12) {
    best_x = p_prime;
    best_v = fP;
  }
  if (f0 > best_v + 1e-12) {
    best_x = 0.0;
    best_v = f0;
  }

  out.grid_fallback = fallback;
  out.alloc = Allocation(sc.tau_sic, best_x, p_prime - best_x, kappa);
  out.objective = best_v;

  const double scale = std::max(1.0, p_prime);
  if (best_x <= 0.0) {
    out.kkt_residual = std::max(0.0, f.slope(0.0)) * scale;
  } else if (best_x >= p_prime) {
    out.kkt_residual = std::max(0.0, -f.slope(p_prime)) * scale;
  } else {
    out.kkt_residual = std::abs(f.slope(best_x)) * scale;
  }
  return out;
}

Theorem1Witness theorem1_witness(const Scenario& sc, const Allocation& alloc) {
  const double g1 = sc.channel.gamma1;
  const double g2 = sc.channel.gamma2;
  const double l = sc.sic.lambda;

  auto obj_at_kappa = [&](double k) {
    return detail::private_rate_raw(g1, alloc.p1, alloc.p2, alloc.p_c, l, k) +
           detail::private_rate_raw(g2, alloc.p2, alloc.p1, alloc.p_c, l, k);
  };

  const double h = 1e-6;
  const double k0 = std::max(h, std::min(1.0 - h, static_cast<double>(alloc.kappa)));
  const double dk = (obj_at_kappa(k0 + h) - obj_at_kappa(k0 - h)) / (2.0 * h);

  const double dpc = private_rate_dpc(g1, alloc.p1, alloc.p2, alloc.p_c, l, alloc.kappa).value +
                     private_rate_dpc(g2, alloc.p2, alloc.p1, alloc.p_c, l, alloc.kappa).value;

  auto sgn = [](double v) { return v > 1e-14 ? 1 : (v < -1e-14 ? -1 : 0); };
  return Theorem1Witness{sgn(dk), sgn(dpc)};
}

}  // namespace rsma::private_max
