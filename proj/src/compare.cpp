#include "uavmec/compare.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "uavmec/model.hpp"

namespace uavmec {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Literal short-packet threshold, without the zero-bits override: charges
// the dispersion penalty e^{Qinv(eps)/sqrt(N)} - 1 > 0 even at zero bits.
double threshold_literal(double rhoL, double n, double eps) {
  if (n <= 0.0) throw DomainError("threshold_literal: N must be > 0");
  if (!(eps > 0.0 && eps < 0.5)) {
    throw DomainError("threshold_literal: eps must lie in (0, 0.5)");
  }
  return std::expm1(std::numbers::ln2 * rhoL / (n * (1.0 - eps)) +
                    inverse_q(eps) / std::sqrt(n));
}

double threshold_at(double rhoL, double n, double eps, bool zero_override) {
  if (zero_override) return snr_threshold(Regime::finite, rhoL, n, eps);
  return threshold_literal(rhoL, n, eps);
}

}  // namespace

AbFields ab_fields(double rho1L1, double rho2L2, double N, double eps1,
                   double eps2, bool zero_override) {
  const double u1 = threshold_at(rho1L1, N, eps1, zero_override);
  const double u2 = threshold_at(rho2L2, N, eps2, zero_override);
  const double u1h = threshold_at(rho1L1, 0.5 * N, eps1, zero_override);
  const double u2h = threshold_at(rho2L2, 0.5 * N, eps2, zero_override);
  AbFields out;
  out.A = 1.0 - u1 * u2;
  out.B = (u1 + 1.0) * (u2 + 1.0) - 0.5 * ((u1h + 1.0) + (u2h + 1.0));
  return out;
}

DeltaResult noma_fdma_finite_delta(const Decision& dec,
                                   const SystemConfig& cfg,
                                   const UeProfile& ue1, const UeProfile& ue2,
                                   EvalMode mode) {
  const double n = cfg.B * dec.t;
  if (n <= 0.0) {
    throw DomainError("noma_fdma_finite_delta: t must be > 0");
  }
  const double r1l1 = dec.rho1 * ue1.L;
  const double r2l2 = dec.rho2 * ue2.L;
  const double bu1 = 1.0 + snr_threshold(Regime::finite, r1l1, n, ue1.eps);
  const double bu2 = 1.0 + snr_threshold(Regime::finite, r2l2, n, ue2.eps);
  const double bu1h =
      1.0 + snr_threshold(Regime::finite, r1l1, 0.5 * n, ue1.eps);
  const double bu2h =
      1.0 + snr_threshold(Regime::finite, r2l2, 0.5 * n, ue2.eps);
  const ChannelState ch = channel_gains(dec.d, cfg);

  DeltaResult out;
  out.delta_bound =
      (bu1 * bu2 / ch.hbar1 -
       (bu1h / (2.0 * ch.hbar1) + bu2h / (2.0 * ch.hbar2)) +
       (1.0 / ch.hbar2 - 1.0 / ch.hbar1) * (bu2 + 0.5)) *
      (n / cfg.B);

  const double e_fdma =
      total_energy(Scheme::fdma, Regime::finite, dec, cfg, ue1, ue2, mode)
          .total;
  try {
    const double e_noma =
        total_energy(Scheme::noma, Regime::finite, dec, cfg, ue1, ue2, mode)
            .total;
    out.exact_gap = e_noma - e_fdma;
    out.noma_feasible = true;
  } catch (const SicInfeasibleError&) {
    out.exact_gap = kNan;
    out.noma_feasible = false;
  }
  return out;
}

double delta_symmetric(double rhoL, double N, double eps) {
  const double bu = 1.0 + snr_threshold(Regime::finite, rhoL, N, eps);
  const double buh = 1.0 + snr_threshold(Regime::finite, rhoL, 0.5 * N, eps);
  return bu * bu - buh;
}

const GapCell* ComparisonReport::find(Scheme s, Regime r) const {
  for (const auto& c : cells) {
    if (c.scheme == s && c.regime == r) return &c;
  }
  return nullptr;
}

double ComparisonReport::gap(Scheme a, Scheme b, Regime r) const {
  const GapCell* ca = find(a, r);
  const GapCell* cb = find(b, r);
  if (!ca || !cb || !ca->ok || !cb->ok) return kNan;
  return ca->result.energy.total - cb->result.energy.total;
}

ComparisonReport scheme_gaps(const SystemConfig& cfg, const UeProfile& ue1,
                             const UeProfile& ue2,
                             const std::vector<Scheme>& schemes,
                             const std::vector<Regime>& regimes) {
  ComparisonReport rep;
  for (const Regime r : regimes) {
    for (const Scheme s : schemes) {
      GapCell cell;
      cell.scheme = s;
      cell.regime = r;
      try {
        cell.result = bcd_solve_multistart(s, r, cfg, ue1, ue2);
        cell.ok = true;
        cell.status = "ok";
        cell.bt_degenerate =
            r == Regime::finite && cfg.B * cell.result.decision.t < 2.0;
      } catch (const InfeasibleError& e) {
        cell.status = e.constraint_id;
      } catch (const SicInfeasibleError&) {
        cell.status = "sic-margin";
      } catch (const InfeasibleTimeError&) {
        cell.status = "t-guard";
      }
      rep.cells.push_back(std::move(cell));
    }
  }
  return rep;
}

}  // namespace uavmec
