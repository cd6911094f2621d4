#pragma once

#include "uavmec/optimize.hpp"
#include "uavmec/types.hpp"

namespace uavmec {

// Exhaustive-search configuration. t_step <= 0 means T_max/100; d_step is
// unused while the UAV location comes from solve_uav_location (kept so a
// gridded-d variant stays expressible).
struct GridSpec {
  double rho_step = 0.02;
  double t_step = 0.0;
  double d_step = 0.0;
  EvalMode eval_mode = EvalMode::strict;
};

// Brute-force global baseline: enumerates (rho1 outer, rho2, then t),
// resolves d per point via solve_uav_location, skips infeasible points, and
// returns the minimum-energy feasible point. Deterministic; ties keep the
// first point in scan order. iterations reports the number of feasible
// points evaluated. Throws InfeasibleError when no grid point is feasible.
OptResult grid_search(Scheme scheme, Regime regime, const SystemConfig& cfg,
                      const UeProfile& ue1, const UeProfile& ue2,
                      const GridSpec& spec);

enum class SubproblemKind { task_split, time };

struct OracleResult {
  Decision argmin;
  double value = 0.0;
};

// Brute-force reference for one subproblem: task_split scans (rho1, rho2) at
// the frozen (t, d); time scans t at the frozen (rho, d). step is the rho
// step or the t step respectively. Used to validate the SCA solvers.
OracleResult subproblem_oracle(SubproblemKind kind, Scheme scheme,
                               Regime regime, const Decision& frozen,
                               const SystemConfig& cfg, const UeProfile& ue1,
                               const UeProfile& ue2, double step);

}  // namespace uavmec
