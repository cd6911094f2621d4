#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "uavmec/energy.hpp"
#include "uavmec/types.hpp"

namespace uavmec {

// Coefficients of the reduced subproblems at a given outer point.
// zeta_k/xi_k scale the cubic remote/local computing energies at fixed t;
// omega_k/v_k are the exponent coefficients of the threshold exponential
// e^{omega_k rho_k + v_k} in the task-split subproblem (using the scheme's
// per-UE blocklength share); z_k/s_k are the exponent coefficients
// e^{z_k/t + s_k/sqrt(t)} of the time subproblem at fixed rho.
struct SubproblemCoefficients {
  double zeta1 = 0.0, zeta2 = 0.0;
  double xi1 = 0.0, xi2 = 0.0;
  double omega1 = 0.0, omega2 = 0.0;
  double v1 = 0.0, v2 = 0.0;
  double z1 = 0.0, z2 = 0.0;
  double s1 = 0.0, s2 = 0.0;
};
SubproblemCoefficients subproblem_coefficients(Scheme scheme, Regime regime,
                                               const Decision& dec,
                                               const SystemConfig& cfg,
                                               const UeProfile& ue1,
                                               const UeProfile& ue2);

// Slack variables of the convexified subproblems, evaluated at equality
// (their tight values) for a given decision. mu_tilde_k = A / (U_k + 1) is
// the SIC-failure power reciprocal slack, lambda_tilde_k = ln(1 - mu_k);
// p_breve_k are the causality-tight powers, varsigma_breve_k = 1/(U_k + 1)
// the threshold reciprocals, e_breve_k the offload energies.
struct SlackState {
  double lambda_tilde1 = 0.0, lambda_tilde2 = 0.0;
  double mu_tilde1 = 0.0, mu_tilde2 = 0.0;
  double p_breve1 = 0.0, p_breve2 = 0.0;
  double varsigma_breve1 = 0.0, varsigma_breve2 = 0.0;
  double e_breve1 = 0.0, e_breve2 = 0.0;
};
SlackState tight_slacks(Scheme scheme, Regime regime, const Decision& dec,
                        const SystemConfig& cfg, const UeProfile& ue1,
                        const UeProfile& ue2);

struct OptResult {
  Decision decision;
  EnergyBreakdown energy;
  std::vector<double> trace;  // objective after each outer iteration
  int iterations = 0;
  bool converged = false;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Tangent of e^x at x0; lower-bounds e^x everywhere, equality at x0.
double exp_tangent(double x, double x0);

// True reduced objective over (rho1, rho2) at fixed (t, d), +infinity when
// the point is infeasible for the reduced problem.
double rho_objective(Scheme scheme, Regime regime, double rho1, double rho2,
                     double t, double d, const SystemConfig& cfg,
                     const UeProfile& ue1, const UeProfile& ue2);

// Convex majorizer of the NOMA rho-objective at expansion point rho0.
// Upper-bounds rho_objective on the feasible region with equality at rho0:
// cubic terms and e^{x1+x2} kept exact, the subtracted convex exponential of
// the success power tangent-linearized, the failure terms routed through the
// concave lambda_k with tangents from above. Returns +infinity where the
// inner approximation cuts the region (tangent-predicted margin
// nonpositive).
double noma_rho_majorizer(Regime regime, double rho1, double rho2,
                          double rho1_0, double rho2_0, double t, double d,
                          const SystemConfig& cfg, const UeProfile& ue1,
                          const UeProfile& ue2);

// Task-split subproblem at fixed (t, d). FDMA/TDMA objectives are convex and
// minimized directly (grid scan + compass polish, init always a candidate);
// NOMA additionally runs a majorize-minimize loop (relative tolerance 1e-4,
// at most 50 inner iterations) and returns the better point. Never worse
// than init_rho; throws InfeasibleError naming the binding constraint when
// no feasible rho exists.
std::pair<double, double> solve_task_split(Scheme scheme, Regime regime,
                                           double t, double d,
                                           const SystemConfig& cfg,
                                           const UeProfile& ue1,
                                           const UeProfile& ue2,
                                           std::pair<double, double> init_rho);

// Feasible offloading-time interval at fixed (rho, d): the UAV CPU cap gives
// the upper bound (closed form for a shared window, bisection for TDMA's two
// windows), the power caps and the SIC margin give the lower bound by
// bisection (thresholds fall monotonically as t grows). Empty -> nullopt.
std::optional<Interval> feasible_time_interval(Scheme scheme, Regime regime,
                                               double rho1, double rho2,
                                               double d,
                                               const SystemConfig& cfg,
                                               const UeProfile& ue1,
                                               const UeProfile& ue2);

// Time subproblem at fixed (rho, d): dense scan of the feasible interval
// plus golden-section polish; init_t is always a candidate, so the result is
// never worse. Ties resolve to the smallest t. Throws InfeasibleError when
// the interval is empty.
double solve_offload_time(Scheme scheme, Regime regime, double rho1,
                          double rho2, double d, const SystemConfig& cfg,
                          const UeProfile& ue1, const UeProfile& ue2,
                          double init_t);

// Feasible d interval from the power-cap inversion (the required power of
// UE k scales with its squared distance to the UAV), intersected with
// [0, D/2] for NOMA or [0, D] otherwise. Outputs the normalized power
// coefficients a_k (p_k = a_k / hbar_k) when requested.
std::optional<Interval> feasible_location_interval(
    Scheme scheme, Regime regime, double rho1, double rho2, double t,
    const SystemConfig& cfg, const UeProfile& ue1, const UeProfile& ue2,
    double* a1_out = nullptr, double* a2_out = nullptr);

// UAV-location subproblem at fixed (rho, t). NOMA-finite uses the closed
// form d* = clamp(Psi D / (Phi + Psi), d_lo, d_hi) on the average-power
// coefficients (success-branch coefficients when the margin fails, leaving
// rejection of such points to the shared feasibility check); other
// scheme/regimes run golden-section on the weighted sum-power objective to
// |delta d| <= 1e-4 m. Throws InfeasibleError when no d satisfies the power
// caps.
double solve_uav_location(Scheme scheme, Regime regime, double rho1,
                          double rho2, double t, const SystemConfig& cfg,
                          const UeProfile& ue1, const UeProfile& ue2);

// Default initialization: rho = (0.5, 0.5) clamped into the CPU-cap box,
// t = 0.5*T_max clamped into the feasible time interval, d = 0.25*D. Falls
// back to the smallest feasible rho when the clamped midpoint has an empty
// time interval. Throws InfeasibleError when even that fails.
Decision default_init(Scheme scheme, Regime regime, const SystemConfig& cfg,
                      const UeProfile& ue1, const UeProfile& ue2);

struct BcdOptions {
  std::optional<double> fix_rho;  // benchmark: freeze rho_k = clamp(value)
  std::optional<double> fix_t;    // benchmark: freeze t = value
  int max_outer = 30;
};

// Block coordinate descent cycling task split, offloading time, and UAV
// location until the relative objective change drops below sigma_conv or
// max_outer iterations. The trace is nonincreasing (each step keeps the
// incumbent when its candidate does not improve). Throws InfeasibleError on
// an infeasible initialization.
OptResult bcd_solve(Scheme scheme, Regime regime, const SystemConfig& cfg,
                    const UeProfile& ue1, const UeProfile& ue2,
                    const Decision& init, const BcdOptions& opts = {});

// Deterministic multi-start wrapper: runs bcd_solve from the default init
// and from a fixed ladder of initial offloading times (exact coordinate
// descent can lock onto the SIC margin curve at a point determined by the
// initial t, so a single start may stall far from the best basin), returning
// the lowest-energy converged result.
OptResult bcd_solve_multistart(Scheme scheme, Regime regime,
                               const SystemConfig& cfg, const UeProfile& ue1,
                               const UeProfile& ue2,
                               const BcdOptions& opts = {});

}  // namespace uavmec
