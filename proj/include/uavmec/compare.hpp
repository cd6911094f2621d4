#pragma once

#include <string>
#include <vector>

#include "uavmec/optimize.hpp"
#include "uavmec/types.hpp"

namespace uavmec {

// Analytical feasibility/advantage fields over the offloaded-bits plane.
// A = 1 - U1^F(N) U2^F(N) must stay positive for the NOMA failure branch;
// B = (U1^F(N)+1)(U2^F(N)+1) - 0.5 * sum_k (U_k^F(N/2)+1) is the sign field
// of the NOMA-FDMA finite-blocklength gap bound. zero_override selects the
// model-consistent thresholds (U = 0 at zero bits); disabling it evaluates
// the literal short-packet formula, which charges a positive threshold even
// for zero bits.
struct AbFields {
  double A = 0.0;
  double B = 0.0;
};
AbFields ab_fields(double rho1L1, double rho2L2, double N, double eps1,
                   double eps2, bool zero_override = true);

// NOMA-FDMA finite-blocklength gap bound evaluated at a decision (meant to
// be a solved NOMA optimum), together with the exact energy difference
// E_NOMA - E_FDMA at the same point for cross-checking. The bound drops the
// computing terms (identical between the schemes at fixed rho, t) and
// compares offload energies with eta = 1/2.
struct DeltaResult {
  double delta_bound = 0.0;
  double exact_gap = 0.0;
  bool noma_feasible = false;
};
DeltaResult noma_fdma_finite_delta(const Decision& dec,
                                   const SystemConfig& cfg,
                                   const UeProfile& ue1, const UeProfile& ue2,
                                   EvalMode mode = EvalMode::strict);

// Fully symmetric special case of the gap bound (equal channels, loads, and
// eps): returns (U^F(N)+1)^2 - (U^F(N/2)+1), whose sign is the sign of the
// gap bound. Strictly positive for every eps < 0.5.
double delta_symmetric(double rhoL, double N, double eps);

struct GapCell {
  Scheme scheme = Scheme::noma;
  Regime regime = Regime::infinite;
  bool ok = false;
  std::string status;  // "ok" or the failure id
  bool bt_degenerate = false;  // solved optimum has B*t < 2; the analytic
                               // FDMA ordering chain does not apply there
  OptResult result;
};

struct ComparisonReport {
  std::vector<GapCell> cells;
  const GapCell* find(Scheme s, Regime r) const;
  // Difference of stored optimal energies (a - b); both cells must be ok.
  double gap(Scheme a, Scheme b, Regime r) const;
};

// Runs the full optimizer per requested scheme/regime and tabulates optimal
// energies; per-cell failures are recorded, never thrown.
ComparisonReport scheme_gaps(const SystemConfig& cfg, const UeProfile& ue1,
                             const UeProfile& ue2,
                             const std::vector<Scheme>& schemes,
                             const std::vector<Regime>& regimes);

}  // namespace uavmec
