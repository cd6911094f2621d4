#include "uavmec/power.hpp"

#include "uavmec/model.hpp"

namespace uavmec {

std::pair<double, double> scheme_thresholds(Scheme scheme, Regime regime,
                                            double rho1, double rho2, double t,
                                            const SystemConfig& cfg,
                                            const UeProfile& ue1,
                                            const UeProfile& ue2) {
  const double r1L = rho1 * ue1.L;
  const double r2L = rho2 * ue2.L;
  // Per-UE symbol budgets: NOMA superposes both users on the full block,
  // FDMA narrows each user's bandwidth, TDMA shortens each user's slot.
  double share1 = 1.0, share2 = 1.0;
  if (scheme == Scheme::fdma) {
    share1 = cfg.eta;
    share2 = 1.0 - cfg.eta;
  } else if (scheme == Scheme::tdma) {
    share1 = cfg.delta;
    share2 = 1.0 - cfg.delta;
  }
  const double n = cfg.B * t;  // symbols in the infinite case too, = B*t
  const double u1 =
      snr_threshold(regime, r1L, share1 * n, ue1.eps, cfg.V);
  const double u2 =
      snr_threshold(regime, r2L, share2 * n, ue2.eps, cfg.V);
  return {u1, u2};
}

double sic_margin(double rho1, double rho2, double t, const SystemConfig& cfg,
                  const UeProfile& ue1, const UeProfile& ue2) {
  if (!(t > 0.0)) throw DomainError("sic_margin: t must be positive");
  const auto [u1, u2] = scheme_thresholds(Scheme::noma, Regime::finite, rho1,
                                          rho2, t, cfg, ue1, ue2);
  return 1.0 - u1 * u2;
}

PowerSolution min_powers(Scheme scheme, Regime regime, const Decision& dec,
                         const SystemConfig& cfg, const UeProfile& ue1,
                         const UeProfile& ue2, EvalMode mode) {
  PowerSolution out;
  if (dec.rho1 * ue1.L == 0.0 && dec.rho2 * ue2.L == 0.0) {
    return out;  // zero-offload override: nothing transmitted
  }
  const ChannelState ch = channel_gains(dec.d, cfg);
  const auto [u1, u2] = scheme_thresholds(scheme, regime, dec.rho1, dec.rho2,
                                          dec.t, cfg, ue1, ue2);
  out.sinr1 = u1;
  out.sinr2 = u2;
  switch (scheme) {
    case Scheme::noma: {
      // Decoding order (i): UE 1 decoded first against UE 2's interference,
      // UE 2 clean afterwards. Success powers meet both thresholds tightly.
      const double p_hat1 = u1 * (u2 + 1.0) / ch.hbar1;
      const double p_hat2 = u2 / ch.hbar2;
      if (regime == Regime::infinite) {
        out.p1 = p_hat1;
        out.p2 = p_hat2;
        return out;
      }
      const double a = 1.0 - u1 * u2;
      out.margin = a;
      if (a <= kMarginGuard) {
        if (mode == EvalMode::strict) {
          throw SicInfeasibleError(
              "min_powers: SIC margin at or below guard band");
        }
        out.p1 = p_hat1;
        out.p2 = p_hat2;
        out.success_only = true;
        return out;
      }
      // Failure branch: UE 1's signal survives as interference on UE 2, and
      // both thresholds must hold simultaneously under mutual interference.
      const double p_check1 = u1 * (u2 + 1.0) / (ch.hbar1 * a);
      const double p_check2 = u2 * (u1 + 1.0) / (ch.hbar2 * a);
      // The failure event is UE 1's first-pass decode miss, probability
      // eps1, so both UEs average with that weight.
      const double e1 = ue1.eps;
      out.p1 = (1.0 - e1) * p_hat1 + e1 * p_check1;
      out.p2 = (1.0 - e1) * p_hat2 + e1 * p_check2;
      out.noma_branches = NomaBranches{p_hat1, p_hat2, p_check1, p_check2};
      return out;
    }
    case Scheme::fdma:
      // Each UE sees only its own bandwidth slice of noise.
      out.p1 = cfg.eta * u1 / ch.hbar1;
      out.p2 = (1.0 - cfg.eta) * u2 / ch.hbar2;
      return out;
    case Scheme::tdma:
      out.p1 = u1 / ch.hbar1;
      out.p2 = u2 / ch.hbar2;
      return out;
  }
  throw DomainError("min_powers: unknown scheme");
}

}  // namespace uavmec
