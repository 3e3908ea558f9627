// SPDX-License-Identifier: Apache-2.0
//
// rsma: achievable-rate analysis and power allocation for a two-user
// downlink rate-splitting link with an improper-Gaussian common stream
// and residual interference after successive interference cancellation.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace rsma {

/// Problem infeasible for the given inputs (as opposed to malformed inputs,
/// which raise std::domain_error).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void expect(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

inline bool finite(double x) { return std::isfinite(x); }

}  // namespace detail

/// Linear channel-to-noise ratios of the two users. The constructor orders
/// them so that gamma1 >= gamma2; `swapped` records whether the inputs were
/// reordered so callers can map results back to their original user labels.
struct ChannelParams {
  double gamma1;
  double gamma2;
  bool swapped = false;

  ChannelParams(double g1, double g2) : gamma1(g1), gamma2(g2) {
    detail::expect(detail::finite(g1) && g1 > 0.0, "ChannelParams: gamma1 must be positive and finite");
    detail::expect(detail::finite(g2) && g2 > 0.0, "ChannelParams: gamma2 must be positive and finite");
    if (gamma1 < gamma2) {
      std::swap(gamma1, gamma2);
      swapped = true;
    }
  }

  /// CNRs from channel magnitudes and a common noise power (default 1).
  static ChannelParams from_gains(double h1, double h2, double sigma2 = 1.0) {
    detail::expect(detail::finite(sigma2) && sigma2 > 0.0, "ChannelParams: sigma2 must be positive and finite");
    detail::expect(detail::finite(h1) && h1 != 0.0, "ChannelParams: h1 must be nonzero and finite");
    detail::expect(detail::finite(h2) && h2 != 0.0, "ChannelParams: h2 must be nonzero and finite");
    return {h1 * h1 / sigma2, h2 * h2 / sigma2};
  }
};

/// Residual-interference coefficient of the SIC stage. 0 is perfect
/// cancellation; 1 leaves the common stream uncancelled.
struct SicModel {
  double lambda = 0.0;

  SicModel() = default;
  explicit SicModel(double l) : lambda(l) {
    detail::expect(detail::finite(l) && l >= 0.0 && l <= 1.0, "SicModel: lambda must lie in [0,1]");
  }
};

/// Circularity coefficient of the common stream: |pseudo-variance|/variance.
/// 0 is proper signaling, 1 maximally improper.
struct Impropriety {
  double kappa = 0.0;

  Impropriety() = default;
  Impropriety(double k) : kappa(k) {
    detail::expect(detail::finite(k) && k >= 0.0 && k <= 1.0, "Impropriety: kappa must lie in [0,1]");
  }
  operator double() const { return kappa; }
};

/// One transmit decision: common power, the two private powers and the
/// impropriety of the common stream.
struct Allocation {
  double p_c = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  Impropriety kappa;

  Allocation() = default;
  Allocation(double pc_, double p1_, double p2_, Impropriety k) : p_c(pc_), p1(p1_), p2(p2_), kappa(k) {
    detail::expect(detail::finite(p_c) && p_c >= 0.0, "Allocation: p_c must be nonnegative");
    detail::expect(detail::finite(p1) && p1 >= 0.0, "Allocation: p1 must be nonnegative");
    detail::expect(detail::finite(p2) && p2 >= 0.0, "Allocation: p2 must be nonnegative");
  }

  double total_power() const { return p_c + p1 + p2; }
};

/// Full system description: channel, SIC quality, power budget P, the
/// common-power floor needed for decodable SIC, and the per-user minimum
/// private rate (bits per channel use).
struct Scenario {
  ChannelParams channel;
  SicModel sic;
  double power_budget;  // P, linear
  double tau_sic;       // lower bound on p_c, linear
  double r_min;         // minimum private rate, bits

  Scenario(ChannelParams ch, SicModel s, double P, double tau, double rmin)
      : channel(ch), sic(s), power_budget(P), tau_sic(tau), r_min(rmin) {
    detail::expect(detail::finite(P) && P > 0.0, "Scenario: power budget must be positive");
    detail::expect(detail::finite(tau) && tau >= 0.0 && tau <= P, "Scenario: tau_sic must lie in [0, P]");
    detail::expect(detail::finite(rmin) && rmin >= 0.0, "Scenario: r_min must be nonnegative");
  }
};

}  // namespace rsma
