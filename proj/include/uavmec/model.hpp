#pragma once

#include "uavmec/types.hpp"

namespace uavmec {

// Free-space channel gains at UAV position (d, H): h1 sees the horizontal
// distance d, h2 sees D - d. Throws DomainError for d outside [0, D].
ChannelState channel_gains(double d, const SystemConfig& cfg);

// Per-UE CPU frequencies under the deadline: local work spreads over T_max,
// remote work over the scheme's remaining window (T_max - t for NOMA/FDMA
// and TDMA UE 2, T_max - delta*t for TDMA UE 1, whose slot ends earlier).
struct CpuSplit {
  double f_loc1 = 0.0;
  double f_rem1 = 0.0;
  double f_loc2 = 0.0;
  double f_rem2 = 0.0;
};
CpuSplit cpu_frequencies(Scheme scheme, double rho1, double rho2, double t,
                         const SystemConfig& cfg, const UeProfile& ue1,
                         const UeProfile& ue2);

// Cubic-in-frequency computation energies for the same split.
struct CompEnergies {
  double e_loc1 = 0.0;
  double e_rem1 = 0.0;
  double e_loc2 = 0.0;
  double e_rem2 = 0.0;
};
CompEnergies computation_energies(Scheme scheme, double rho1, double rho2,
                                  double t, const SystemConfig& cfg,
                                  const UeProfile& ue1, const UeProfile& ue2);

// Scheme-specific remote-computing windows (rt1, rt2); shared by the energy
// and feasibility paths so the definition cannot drift.
void remote_times(Scheme scheme, double t, const SystemConfig& cfg,
                  double& rt1, double& rt2);

// Inverse Gaussian tail: returns x with Q(x) = eps to absolute accuracy
// better than 1e-9, by bisection on 0.5*erfc(x/sqrt(2)). Memoized per
// thread; eps outside (0, 1) throws DomainError.
double inverse_q(double eps);

// Minimum SINR/SNR needed to push rhoL bits through n_or_bt channel symbols.
// Infinite regime ignores eps and V. rhoL = 0 returns exactly 0 in both
// regimes (no data means no transmission; the literal finite formula would
// report positive power for zero bits). Nonpositive blocklength with
// positive rhoL throws DomainError.
double snr_threshold(Regime regime, double rhoL, double n_or_bt, double eps,
                     double V = 1.0);

// Inverses of snr_threshold, used by the causality round-trip checks:
// bits deliverable at the given SINR over the given symbols.
double rate_infinite(double sinr, double bt);
double rate_finite(double sinr, double n, double eps, double V = 1.0);

}  // namespace uavmec
