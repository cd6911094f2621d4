#pragma once

#include <optional>
#include <utility>

#include "uavmec/types.hpp"

namespace uavmec {

// Failure-branch powers diverge as the SIC margin A = 1 - U1*U2 -> 0+, so
// anything at or below this band counts as infeasible even when positive.
inline constexpr double kMarginGuard = 1e-9;

// NOMA finite-blocklength branch powers: success (SIC removes UE 1's signal
// before UE 2 decodes) and failure (both decode under mutual interference).
struct NomaBranches {
  double p_hat1 = 0.0;
  double p_hat2 = 0.0;
  double p_check1 = 0.0;
  double p_check2 = 0.0;
};

struct PowerSolution {
  double p1 = 0.0;  // regime-appropriate minimum power (NOMA-finite: average)
  double p2 = 0.0;
  double sinr1 = 0.0;  // required SINR/SNR thresholds
  double sinr2 = 0.0;
  std::optional<NomaBranches> noma_branches;
  double margin = 1.0;        // SIC feasibility field A (NOMA-finite only)
  bool success_only = false;  // true when A <= guard was evaluated on the
                              // success branch alone (success-only mode)
};

// Required SINR/SNR thresholds per UE with the scheme's resource split:
// NOMA shares the full blocklength, FDMA splits bandwidth eta/(1-eta),
// TDMA splits time delta/(1-delta).
std::pair<double, double> scheme_thresholds(Scheme scheme, Regime regime,
                                            double rho1, double rho2, double t,
                                            const SystemConfig& cfg,
                                            const UeProfile& ue1,
                                            const UeProfile& ue2);

// Minimum transmit powers meeting the information-causality constraints with
// equality. NOMA assumes decoding order (i), i.e. d <= D/2 so UE 1 is the
// stronger user; callers relabel UEs for the mirrored order. For NOMA-finite
// in strict mode, A <= guard throws SicInfeasibleError; success-only mode
// returns the success-branch powers flagged instead. Exceeding a power cap
// is not an error here (the constraint report carries it).
PowerSolution min_powers(Scheme scheme, Regime regime, const Decision& dec,
                         const SystemConfig& cfg, const UeProfile& ue1,
                         const UeProfile& ue2,
                         EvalMode mode = EvalMode::strict);

// SIC feasibility field A = 1 - U1^F * U2^F at N = B*t; the NOMA-finite
// failure branch needs A > 0 for nonnegative powers.
double sic_margin(double rho1, double rho2, double t, const SystemConfig& cfg,
                  const UeProfile& ue1, const UeProfile& ue2);

}  // namespace uavmec
