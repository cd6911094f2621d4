#pragma once

#include <string>
#include <vector>

#include "uavmec/power.hpp"
#include "uavmec/types.hpp"

namespace uavmec {

struct EnergyBreakdown {
  double e_loc1 = 0.0;
  double e_rem1 = 0.0;
  double e_off1 = 0.0;
  double e_loc2 = 0.0;
  double e_rem2 = 0.0;
  double e_off2 = 0.0;
  double total = 0.0;
  bool sic_infeasible_evaluated_success_only = false;
};

// Total MEC-related energy at one decision: local computing, UAV remote
// computing, and offload transmission. TDMA weights the offload terms by the
// slot shares (UE 1 transmits for delta*t, UE 2 for (1-delta)*t).
// Propagates InfeasibleTimeError, and SicInfeasibleError unless mode is
// success-only.
EnergyBreakdown total_energy(Scheme scheme, Regime regime, const Decision& dec,
                             const SystemConfig& cfg, const UeProfile& ue1,
                             const UeProfile& ue2,
                             EvalMode mode = EvalMode::strict);

struct ConstraintEntry {
  std::string id;
  bool satisfied = false;
  double slack = 0.0;  // signed; nonnegative when satisfied (up to tolerance)
};

struct ConstraintReport {
  std::vector<ConstraintEntry> entries;
  bool feasible() const;
  const ConstraintEntry* find(const std::string& id) const;
};

// Evaluates every constraint of the matching scheme/regime problem with
// signed slacks; never throws. Entries that do not apply to the problem
// (sic-margin outside NOMA-finite, noma-order outside NOMA) are omitted.
// Power caps use the regime-appropriate powers (averages for NOMA-finite).
// In success-only mode the sic-margin entry stays advisory: its slack is
// reported but it never blocks feasibility. This function is the single
// feasibility definition shared by the solvers, the grid oracle, and the
// sweep harness.
ConstraintReport check_constraints(Scheme scheme, Regime regime,
                                   const Decision& dec,
                                   const SystemConfig& cfg,
                                   const UeProfile& ue1, const UeProfile& ue2,
                                   EvalMode mode = EvalMode::strict);

// check_constraints(...).feasible() with early exits; same answer.
bool is_feasible(Scheme scheme, Regime regime, const Decision& dec,
                 const SystemConfig& cfg, const UeProfile& ue1,
                 const UeProfile& ue2, EvalMode mode = EvalMode::strict);

// Constant lower bound on rho_k from the UE's own CPU cap: computing
// (1-rho)L locally within T_max needs (1-rho)cL/T_max <= f_max.
double rho_lower_bound(const SystemConfig& cfg, const UeProfile& ue);

}  // namespace uavmec
