#include "uavmec/oracle.hpp"

#include <cmath>
#include <limits>

#include "uavmec/energy.hpp"

namespace uavmec {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

OptResult grid_search(Scheme scheme, Regime regime, const SystemConfig& cfg,
                      const UeProfile& ue1, const UeProfile& ue2,
                      const GridSpec& spec) {
  if (spec.rho_step <= 0.0) {
    throw DomainError("grid_search: rho_step must be > 0");
  }
  const double T = cfg.T_max;
  const double t_step = spec.t_step > 0.0 ? spec.t_step : T / 100.0;
  const int nr = static_cast<int>(std::lround(1.0 / spec.rho_step));
  const int nt = static_cast<int>(std::lround(T / t_step));

  OptResult best;
  bool found = false;
  double best_e = kInf;
  int evaluated = 0;
  for (int i = 0; i <= nr; ++i) {
    const double r1 = std::min(i * spec.rho_step, 1.0);
    for (int j = 0; j <= nr; ++j) {
      const double r2 = std::min(j * spec.rho_step, 1.0);
      const bool offloading = r1 * ue1.L > 0.0 || r2 * ue2.L > 0.0;
      for (int k = 0; k <= nt; ++k) {
        double t = std::min(k * t_step, T);
        if (offloading) {
          if (t == 0.0) continue;
          t = std::min(t, (1.0 - cfg.t_guard) * T);
        }
        double d = 0.0;
        try {
          d = solve_uav_location(scheme, regime, r1, r2, t, cfg, ue1, ue2);
        } catch (const InfeasibleError&) {
          continue;
        }
        const Decision dec{r1, r2, t, d};
        if (!is_feasible(scheme, regime, dec, cfg, ue1, ue2,
                         spec.eval_mode)) {
          continue;
        }
        const double e =
            total_energy(scheme, regime, dec, cfg, ue1, ue2, spec.eval_mode)
                .total;
        ++evaluated;
        if (e < best_e) {
          best_e = e;
          best.decision = dec;
          found = true;
        }
        if (!offloading) break;  // energy is t-independent without offload
      }
    }
  }
  if (!found) {
    throw InfeasibleError("grid", "grid_search: no feasible grid point");
  }
  best.energy = total_energy(scheme, regime, best.decision, cfg, ue1, ue2,
                             spec.eval_mode);
  best.trace = {best.energy.total};
  best.iterations = evaluated;
  best.converged = true;
  return best;
}

OracleResult subproblem_oracle(SubproblemKind kind, Scheme scheme,
                               Regime regime, const Decision& frozen,
                               const SystemConfig& cfg, const UeProfile& ue1,
                               const UeProfile& ue2, double step) {
  if (step <= 0.0) throw DomainError("subproblem_oracle: step must be > 0");
  OracleResult out;
  out.argmin = frozen;
  out.value = kInf;
  if (kind == SubproblemKind::task_split) {
    const double lo1 = rho_lower_bound(cfg, ue1);
    const double lo2 = rho_lower_bound(cfg, ue2);
    const int n1 = std::max(1, static_cast<int>(std::lround((1.0 - lo1) / step)));
    const int n2 = std::max(1, static_cast<int>(std::lround((1.0 - lo2) / step)));
    for (int i = 0; i <= n1; ++i) {
      const double r1 = lo1 + (1.0 - lo1) * i / n1;
      for (int j = 0; j <= n2; ++j) {
        const double r2 = lo2 + (1.0 - lo2) * j / n2;
        const double e = rho_objective(scheme, regime, r1, r2, frozen.t,
                                       frozen.d, cfg, ue1, ue2);
        if (e < out.value) {
          out.value = e;
          out.argmin = {r1, r2, frozen.t, frozen.d};
        }
      }
    }
    if (!std::isfinite(out.value)) {
      throw InfeasibleError("task-split",
                            "subproblem_oracle: no feasible task split");
    }
    return out;
  }
  const auto iv = feasible_time_interval(scheme, regime, frozen.rho1,
                                         frozen.rho2, frozen.d, cfg, ue1, ue2);
  if (!iv) {
    throw InfeasibleError("ue-power",
                          "subproblem_oracle: empty feasible time interval");
  }
  const int m =
      std::max(1, static_cast<int>(std::lround((iv->hi - iv->lo) / step)));
  for (int i = 0; i <= m; ++i) {
    const double t = iv->lo + (iv->hi - iv->lo) * i / m;
    const Decision dec{frozen.rho1, frozen.rho2, t, frozen.d};
    const double e = total_energy(scheme, regime, dec, cfg, ue1, ue2).total;
    if (e < out.value) {
      out.value = e;
      out.argmin = dec;
    }
  }
  return out;
}

}  // namespace uavmec
