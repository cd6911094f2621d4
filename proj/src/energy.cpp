#include "uavmec/energy.hpp"

#include <cmath>
#include <limits>

#include "uavmec/model.hpp"

namespace uavmec {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
// Tolerances baked into the shared feasibility definition: relative on the
// resource caps, absolute on the variable box, and a tight relative band on
// the structural bounds (t-guard, NOMA order) so boundary points produced by
// the solvers themselves still pass.
constexpr double kRelTol = 1e-9;
constexpr double kAbsTol = 1e-9;
constexpr double kEdgeTol = 1e-12;
}  // namespace

double rho_lower_bound(const SystemConfig& cfg, const UeProfile& ue) {
  if (ue.L <= 0.0) return 0.0;
  const double lo = 1.0 - cfg.T_max * ue.f_max / (ue.c * ue.L);
  return lo > 0.0 ? lo : 0.0;
}

EnergyBreakdown total_energy(Scheme scheme, Regime regime, const Decision& dec,
                             const SystemConfig& cfg, const UeProfile& ue1,
                             const UeProfile& ue2, EvalMode mode) {
  EnergyBreakdown out;
  const CompEnergies comp = computation_energies(scheme, dec.rho1, dec.rho2,
                                                 dec.t, cfg, ue1, ue2);
  out.e_loc1 = comp.e_loc1;
  out.e_rem1 = comp.e_rem1;
  out.e_loc2 = comp.e_loc2;
  out.e_rem2 = comp.e_rem2;
  const bool offloading =
      dec.rho1 * ue1.L > 0.0 || dec.rho2 * ue2.L > 0.0;
  if (offloading) {
    const PowerSolution ps =
        min_powers(scheme, regime, dec, cfg, ue1, ue2, mode);
    out.sic_infeasible_evaluated_success_only = ps.success_only;
    if (scheme == Scheme::tdma) {
      // Transmission only runs inside each UE's slot.
      out.e_off1 = cfg.delta * ps.p1 * dec.t;
      out.e_off2 = (1.0 - cfg.delta) * ps.p2 * dec.t;
    } else {
      out.e_off1 = ps.p1 * dec.t;
      out.e_off2 = ps.p2 * dec.t;
    }
  }
  out.total = out.e_loc1 + out.e_rem1 + out.e_off1 + out.e_loc2 + out.e_rem2 +
              out.e_off2;
  return out;
}

bool ConstraintReport::feasible() const {
  for (const auto& e : entries) {
    if (!e.satisfied) return false;
  }
  return true;
}

const ConstraintEntry* ConstraintReport::find(const std::string& id) const {
  for (const auto& e : entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

ConstraintReport check_constraints(Scheme scheme, Regime regime,
                                   const Decision& dec,
                                   const SystemConfig& cfg,
                                   const UeProfile& ue1, const UeProfile& ue2,
                                   EvalMode mode) {
  ConstraintReport rep;
  const auto add = [&rep](const std::string& id, bool satisfied,
                          double slack) {
    rep.entries.push_back({id, satisfied, slack});
  };
  const double T = cfg.T_max;
  const bool offloading =
      dec.rho1 * ue1.L > 0.0 || dec.rho2 * ue2.L > 0.0;

  // Variable box.
  add("rho1-range", dec.rho1 >= -kAbsTol && dec.rho1 <= 1.0 + kAbsTol,
      std::min(dec.rho1, 1.0 - dec.rho1));
  add("rho2-range", dec.rho2 >= -kAbsTol && dec.rho2 <= 1.0 + kAbsTol,
      std::min(dec.rho2, 1.0 - dec.rho2));
  add("t-range", dec.t >= -1e-15 && dec.t <= T,
      std::min(dec.t, T - dec.t));
  add("d-range", dec.d >= 0.0 && dec.d <= cfg.D,
      std::min(dec.d, cfg.D - dec.d));
  if (scheme == Scheme::noma) {
    add("noma-order", dec.d <= 0.5 * cfg.D * (1.0 + kEdgeTol),
        0.5 * cfg.D - dec.d);
  }
  if (offloading) {
    // Remote energy diverges at t = T_max, so offloading points must keep a
    // guard band below the deadline, and need strictly positive airtime.
    add("t-guard", dec.t <= (1.0 - cfg.t_guard) * T * (1.0 + kEdgeTol),
        (1.0 - cfg.t_guard) * T - dec.t);
    add("offload-time-positive", dec.t > 0.0, dec.t);
  }

  // Local CPU caps.
  const double floc1 = (1.0 - dec.rho1) * ue1.c * ue1.L / T;
  const double floc2 = (1.0 - dec.rho2) * ue2.c * ue2.L / T;
  add("ue1-cpu", floc1 <= ue1.f_max * (1.0 + kRelTol), ue1.f_max - floc1);
  add("ue2-cpu", floc2 <= ue2.f_max * (1.0 + kRelTol), ue2.f_max - floc2);

  // UAV CPU cap over the scheme's remote windows.
  double rt1 = 0.0, rt2 = 0.0;
  remote_times(scheme, dec.t, cfg, rt1, rt2);
  const double load1 = dec.rho1 * ue1.c * ue1.L;
  const double load2 = dec.rho2 * ue2.c * ue2.L;
  bool window_ok = true;
  double frem = 0.0;
  if (load1 > 0.0) {
    if (rt1 > 0.0) frem += load1 / rt1; else window_ok = false;
  }
  if (load2 > 0.0) {
    if (rt2 > 0.0) frem += load2 / rt2; else window_ok = false;
  }
  if (window_ok) {
    add("uav-cpu", frem <= cfg.f_U_max * (1.0 + kRelTol),
        cfg.f_U_max - frem);
  } else {
    add("uav-cpu", false, -kInf);
  }

  // SIC margin and power caps need computable thresholds (t > 0).
  const bool airtime_ok = !offloading || dec.t > 0.0;
  if (scheme == Scheme::noma && regime == Regime::finite && offloading &&
      dec.t > 0.0) {
    const double a = sic_margin(dec.rho1, dec.rho2, dec.t, cfg, ue1, ue2);
    // Advisory in success-only mode: the sweep plots such points flagged.
    add("sic-margin",
        mode == EvalMode::success_only || a > kMarginGuard,
        a - kMarginGuard);
  } else if (scheme == Scheme::noma && regime == Regime::finite &&
             offloading) {
    add("sic-margin", false, -kInf);
  }
  if (offloading && airtime_ok && dec.d >= 0.0 && dec.d <= cfg.D) {
    const PowerSolution ps = min_powers(scheme, regime, dec, cfg, ue1, ue2,
                                        EvalMode::success_only);
    // success_only here only keeps this function exception-free; when the
    // margin failed, the strict sic-margin entry above already reports it.
    add("ue1-power", ps.p1 <= ue1.P_max * (1.0 + kRelTol),
        ue1.P_max - ps.p1);
    add("ue2-power", ps.p2 <= ue2.P_max * (1.0 + kRelTol),
        ue2.P_max - ps.p2);
  } else if (offloading) {
    add("ue1-power", false, -kInf);
    add("ue2-power", false, -kInf);
  }
  return rep;
}

bool is_feasible(Scheme scheme, Regime regime, const Decision& dec,
                 const SystemConfig& cfg, const UeProfile& ue1,
                 const UeProfile& ue2, EvalMode mode) {
  const double T = cfg.T_max;
  if (!(dec.rho1 >= -kAbsTol && dec.rho1 <= 1.0 + kAbsTol)) return false;
  if (!(dec.rho2 >= -kAbsTol && dec.rho2 <= 1.0 + kAbsTol)) return false;
  if (!(dec.t >= -1e-15 && dec.t <= T)) return false;
  if (!(dec.d >= 0.0 && dec.d <= cfg.D)) return false;
  const bool offloading =
      dec.rho1 * ue1.L > 0.0 || dec.rho2 * ue2.L > 0.0;
  if (offloading && dec.t > (1.0 - cfg.t_guard) * T * (1.0 + kEdgeTol)) {
    return false;
  }
  if (scheme == Scheme::noma && dec.d > 0.5 * cfg.D * (1.0 + kEdgeTol)) {
    return false;
  }
  if ((1.0 - dec.rho1) * ue1.c * ue1.L / T > ue1.f_max * (1.0 + kRelTol)) {
    return false;
  }
  if ((1.0 - dec.rho2) * ue2.c * ue2.L / T > ue2.f_max * (1.0 + kRelTol)) {
    return false;
  }
  double rt1 = 0.0, rt2 = 0.0;
  remote_times(scheme, dec.t, cfg, rt1, rt2);
  const double load1 = dec.rho1 * ue1.c * ue1.L;
  const double load2 = dec.rho2 * ue2.c * ue2.L;
  double frem = 0.0;
  if (load1 > 0.0) {
    if (rt1 <= 0.0) return false;
    frem += load1 / rt1;
  }
  if (load2 > 0.0) {
    if (rt2 <= 0.0) return false;
    frem += load2 / rt2;
  }
  if (frem > cfg.f_U_max * (1.0 + kRelTol)) return false;
  if (offloading) {
    if (dec.t <= 0.0) return false;
    if (scheme == Scheme::noma && regime == Regime::finite &&
        mode == EvalMode::strict) {
      if (sic_margin(dec.rho1, dec.rho2, dec.t, cfg, ue1, ue2) <=
          kMarginGuard) {
        return false;
      }
    }
    const PowerSolution ps = min_powers(scheme, regime, dec, cfg, ue1, ue2,
                                        EvalMode::success_only);
    if (ps.p1 > ue1.P_max * (1.0 + kRelTol)) return false;
    if (ps.p2 > ue2.P_max * (1.0 + kRelTol)) return false;
  }
  return true;
}

}  // namespace uavmec
