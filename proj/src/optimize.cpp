#include "uavmec/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "uavmec/model.hpp"

namespace uavmec {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kRhoScanPoints = 41;   // per axis, before compass polish
constexpr int kTimeScanPoints = 200;
constexpr int kMmMaxIters = 50;
constexpr double kMmRelTol = 1e-4;

// Resource shares of the two UEs under the scheme (bandwidth for FDMA,
// slot time for TDMA, full block for NOMA).
void scheme_shares(Scheme scheme, const SystemConfig& cfg, double& s1,
                   double& s2) {
  switch (scheme) {
    case Scheme::fdma: s1 = cfg.eta; s2 = 1.0 - cfg.eta; break;
    case Scheme::tdma: s1 = cfg.delta; s2 = 1.0 - cfg.delta; break;
    default: s1 = 1.0; s2 = 1.0; break;
  }
}

double clamp01(double x, double lo) { return std::clamp(x, lo, 1.0); }

template <typename F>
double golden_min(F&& f, double a, double b, double tol) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Pattern search over the rho box; accepts the best strictly improving axis
// move, halves the step otherwise. Converges to a stationary point of a
// smooth objective on the box.
template <typename F>
void compass_polish(F&& f, double& x1, double& x2, double& fx, double lo1,
                    double lo2, double h0) {
  double h = h0;
  while (h > 1e-11) {
    double bx1 = x1, bx2 = x2, bf = fx;
    bool improved = false;
    const double moves[4][2] = {{h, 0.0}, {-h, 0.0}, {0.0, h}, {0.0, -h}};
    for (const auto& m : moves) {
      const double y1 = std::clamp(x1 + m[0], lo1, 1.0);
      const double y2 = std::clamp(x2 + m[1], lo2, 1.0);
      const double fy = f(y1, y2);
      if (fy < fx - 1e-18 && fy < bf) {
        bx1 = y1; bx2 = y2; bf = fy;
        improved = true;
      }
    }
    if (improved) {
      x1 = bx1; x2 = bx2; fx = bf;
    } else {
      h *= 0.5;
    }
  }
}

// Scan the rho box at kRhoScanPoints per axis with an incumbent, then
// compass-polish the winner. Returns +infinity objective when nothing in
// the box is feasible.
template <typename F>
void scan_rho_box(F&& f, double lo1, double lo2, double& r1, double& r2,
                  double& fr) {
  const int n = kRhoScanPoints;
  for (int i = 0; i < n; ++i) {
    const double y1 = lo1 + (1.0 - lo1) * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double y2 = lo2 + (1.0 - lo2) * j / (n - 1);
      const double fy = f(y1, y2);
      if (fy < fr) {
        r1 = y1; r2 = y2; fr = fy;
      }
    }
  }
  if (!std::isfinite(fr)) return;
  const double h0 = std::max(1.0 - lo1, 1.0 - lo2) / (n - 1);
  compass_polish(f, r1, r2, fr, lo1, lo2, h0);
}

double off_weight1(Scheme scheme, const SystemConfig& cfg) {
  return scheme == Scheme::tdma ? cfg.delta : 1.0;
}
double off_weight2(Scheme scheme, const SystemConfig& cfg) {
  return scheme == Scheme::tdma ? 1.0 - cfg.delta : 1.0;
}

}  // namespace

double exp_tangent(double x, double x0) {
  return std::exp(x0) * (1.0 + (x - x0));
}

SubproblemCoefficients subproblem_coefficients(Scheme scheme, Regime regime,
                                               const Decision& dec,
                                               const SystemConfig& cfg,
                                               const UeProfile& ue1,
                                               const UeProfile& ue2) {
  SubproblemCoefficients co;
  double rt1 = 0.0, rt2 = 0.0;
  remote_times(scheme, dec.t, cfg, rt1, rt2);
  if (rt1 <= 0.0 || rt2 <= 0.0) {
    throw InfeasibleTimeError("subproblem_coefficients: empty remote window");
  }
  const double T = cfg.T_max;
  const auto cube = [](double x) { return x * x * x; };
  co.zeta1 = cfg.kappa_U * cube(ue1.c * ue1.L) / (rt1 * rt1);
  co.zeta2 = cfg.kappa_U * cube(ue2.c * ue2.L) / (rt2 * rt2);
  co.xi1 = ue1.kappa * cube(ue1.c * ue1.L) / (T * T);
  co.xi2 = ue2.kappa * cube(ue2.c * ue2.L) / (T * T);

  double s1 = 1.0, s2 = 1.0;
  scheme_shares(scheme, cfg, s1, s2);
  const double n = cfg.B * dec.t;
  if (n <= 0.0) throw DomainError("subproblem_coefficients: t must be > 0");
  if (regime == Regime::finite) {
    co.omega1 = kLn2 * ue1.L / (s1 * n * (1.0 - ue1.eps));
    co.omega2 = kLn2 * ue2.L / (s2 * n * (1.0 - ue2.eps));
    co.v1 = std::sqrt(cfg.V) * inverse_q(ue1.eps) / std::sqrt(s1 * n);
    co.v2 = std::sqrt(cfg.V) * inverse_q(ue2.eps) / std::sqrt(s2 * n);
    co.z1 = kLn2 * dec.rho1 * ue1.L / (s1 * cfg.B * (1.0 - ue1.eps));
    co.z2 = kLn2 * dec.rho2 * ue2.L / (s2 * cfg.B * (1.0 - ue2.eps));
    co.s1 = std::sqrt(cfg.V) * inverse_q(ue1.eps) / std::sqrt(s1 * cfg.B);
    co.s2 = std::sqrt(cfg.V) * inverse_q(ue2.eps) / std::sqrt(s2 * cfg.B);
  } else {
    co.omega1 = kLn2 * ue1.L / (s1 * n);
    co.omega2 = kLn2 * ue2.L / (s2 * n);
    co.z1 = kLn2 * dec.rho1 * ue1.L / (s1 * cfg.B);
    co.z2 = kLn2 * dec.rho2 * ue2.L / (s2 * cfg.B);
  }
  return co;
}

SlackState tight_slacks(Scheme scheme, Regime regime, const Decision& dec,
                        const SystemConfig& cfg, const UeProfile& ue1,
                        const UeProfile& ue2) {
  SlackState sl;
  const auto [u1, u2] = scheme_thresholds(scheme, regime, dec.rho1, dec.rho2,
                                          dec.t, cfg, ue1, ue2);
  const double bu1 = u1 + 1.0;
  const double bu2 = u2 + 1.0;
  const double a = 1.0 - u1 * u2;
  sl.mu_tilde1 = a / bu1;
  sl.mu_tilde2 = a / bu2;
  sl.lambda_tilde1 = std::log(1.0 - sl.mu_tilde1);
  sl.lambda_tilde2 = std::log(1.0 - sl.mu_tilde2);
  sl.varsigma_breve1 = 1.0 / bu1;
  sl.varsigma_breve2 = 1.0 / bu2;
  const PowerSolution ps = min_powers(scheme, regime, dec, cfg, ue1, ue2);
  sl.p_breve1 = ps.p1;
  sl.p_breve2 = ps.p2;
  sl.e_breve1 = off_weight1(scheme, cfg) * ps.p1 * dec.t;
  sl.e_breve2 = off_weight2(scheme, cfg) * ps.p2 * dec.t;
  return sl;
}

double rho_objective(Scheme scheme, Regime regime, double rho1, double rho2,
                     double t, double d, const SystemConfig& cfg,
                     const UeProfile& ue1, const UeProfile& ue2) {
  const Decision dec{rho1, rho2, t, d};
  if (!is_feasible(scheme, regime, dec, cfg, ue1, ue2)) return kInf;
  return total_energy(scheme, regime, dec, cfg, ue1, ue2).total;
}

double noma_rho_majorizer(Regime regime, double rho1, double rho2,
                          double rho1_0, double rho2_0, double t, double d,
                          const SystemConfig& cfg, const UeProfile& ue1,
                          const UeProfile& ue2) {
  const Decision at{rho1_0, rho2_0, t, d};
  const SubproblemCoefficients co =
      subproblem_coefficients(Scheme::noma, regime, at, cfg, ue1, ue2);
  const ChannelState ch = channel_gains(d, cfg);
  const auto cube = [](double x) { return x * x * x; };
  double s = co.xi1 * cube(1.0 - rho1) + co.zeta1 * cube(rho1) +
             co.xi2 * cube(1.0 - rho2) + co.zeta2 * cube(rho2);

  const double q1 = co.omega1 * rho1 + co.v1;
  const double q2 = co.omega2 * rho2 + co.v2;
  const double q1_0 = co.omega1 * rho1_0 + co.v1;
  const double q2_0 = co.omega2 * rho2_0 + co.v2;

  // Success powers: keep the jointly convex e^{q1+q2} and the convex
  // e^{q2}-1 exact; the subtracted convex e^{q2} in UE 1's power rides its
  // tangent, which keeps the whole term an upper bound.
  const double phat1 = (std::exp(q1 + q2) - exp_tangent(q2, q2_0)) / ch.hbar1;
  const double phat2 = (std::exp(q2) - 1.0) / ch.hbar2;

  if (regime == Regime::infinite) {
    return s + t * (phat1 + phat2);
  }

  // Failure powers through lambda_k = ln(1 - mu_k): concave in rho, so the
  // first-order expansion bounds it from above, and the power map
  // e^l/(1 - e^l) is convex increasing for l < 0, preserving the bound.
  const auto lam_hat = [](double q_other, double q_self0, double omega_self,
                          double rho_self, double rho_self0) {
    const double em = std::expm1(q_self0);  // e^{q0} - 1
    return q_other + std::log(-std::expm1(-q_self0)) +
           omega_self * (rho_self - rho_self0) / em;
  };
  const double l1 = lam_hat(q2, q1_0, co.omega1, rho1, rho1_0);
  const double l2 = lam_hat(q1, q2_0, co.omega2, rho2, rho2_0);
  // Inner approximation: the tangent-predicted margin must stay inside the
  // guard band or the surrogate point is cut.
  const auto gpow = [](double l) {
    const double el = std::exp(l);
    if (!(1.0 - el > kMarginGuard)) return kInf;
    return el / (1.0 - el);
  };
  const double g1 = gpow(l1);
  const double g2 = gpow(l2);
  if (!std::isfinite(g1) || !std::isfinite(g2)) return kInf;
  const double e1 = ue1.eps;
  return s + t * (1.0 - e1) * (phat1 + phat2) +
         t * e1 * (g1 / ch.hbar1 + g2 / ch.hbar2);
}

std::pair<double, double> solve_task_split(Scheme scheme, Regime regime,
                                           double t, double d,
                                           const SystemConfig& cfg,
                                           const UeProfile& ue1,
                                           const UeProfile& ue2,
                                           std::pair<double, double> init_rho) {
  const double lo1 = rho_lower_bound(cfg, ue1);
  const double lo2 = rho_lower_bound(cfg, ue2);
  const auto f = [&](double r1, double r2) {
    return rho_objective(scheme, regime, r1, r2, t, d, cfg, ue1, ue2);
  };

  // Direct candidate: global scan of the true objective, seeded with init.
  double r1 = init_rho.first, r2 = init_rho.second;
  double fr = f(r1, r2);
  scan_rho_box(f, lo1, lo2, r1, r2, fr);

  // NOMA additionally runs the majorize-minimize loop: each round minimizes
  // the convex upper bound expanded at the current point over the true
  // feasible set, which descends the true objective until it stalls.
  if (scheme == Scheme::noma && std::isfinite(fr)) {
    double m1 = r1, m2 = r2;
    double fm = fr;
    for (int iter = 0; iter < kMmMaxIters; ++iter) {
      const double e1_0 = m1, e2_0 = m2;
      const auto surrogate = [&](double y1, double y2) {
        if (!std::isfinite(
                rho_objective(scheme, regime, y1, y2, t, d, cfg, ue1, ue2))) {
          return kInf;
        }
        return noma_rho_majorizer(regime, y1, y2, e1_0, e2_0, t, d, cfg, ue1,
                                  ue2);
      };
      double n1 = m1, n2 = m2;
      double sn = surrogate(n1, n2);
      scan_rho_box(surrogate, lo1, lo2, n1, n2, sn);
      const double fn = f(n1, n2);
      if (!std::isfinite(fn) || fn > fm) break;
      const double drop = fm - fn;
      m1 = n1; m2 = n2; fm = fn;
      if (drop <= kMmRelTol * std::fabs(fm)) break;
    }
    if (fm < fr) {
      r1 = m1; r2 = m2; fr = fm;
    }
  }

  if (!std::isfinite(fr)) {
    // Report the binding constraint at the most relaxed corner of the box.
    const Decision corner{lo1, lo2, t, d};
    const ConstraintReport rep =
        check_constraints(scheme, regime, corner, cfg, ue1, ue2);
    for (const auto& e : rep.entries) {
      if (!e.satisfied) {
        throw InfeasibleError(e.id,
                              "solve_task_split: no feasible task split (" +
                                  e.id + " binding)");
      }
    }
    throw InfeasibleError("task-split",
                          "solve_task_split: no feasible task split");
  }
  return {r1, r2};
}

std::optional<Interval> feasible_time_interval(Scheme scheme, Regime regime,
                                               double rho1, double rho2,
                                               double d,
                                               const SystemConfig& cfg,
                                               const UeProfile& ue1,
                                               const UeProfile& ue2) {
  const double T = cfg.T_max;
  const bool any_off = rho1 * ue1.L > 0.0 || rho2 * ue2.L > 0.0;
  double hi = any_off ? (1.0 - cfg.t_guard) * T : T;

  // Upper bound from the UAV CPU cap. A shared remote window solves in
  // closed form; TDMA's two windows need a monotone bisection.
  if (scheme != Scheme::tdma) {
    const double load = rho1 * ue1.c * ue1.L + rho2 * ue2.c * ue2.L;
    if (load > 0.0) hi = std::min(hi, T - load / cfg.f_U_max);
  } else {
    const auto cap_ok = [&](double t) {
      double f = 0.0;
      if (rho1 * ue1.L > 0.0) {
        const double rt = T - cfg.delta * t;
        if (rt <= 0.0) return false;
        f += rho1 * ue1.c * ue1.L / rt;
      }
      if (rho2 * ue2.L > 0.0) {
        const double rt = T - t;
        if (rt <= 0.0) return false;
        f += rho2 * ue2.c * ue2.L / rt;
      }
      return f <= cfg.f_U_max;
    };
    if (!cap_ok(0.0)) return std::nullopt;
    if (!cap_ok(hi)) {
      double a = 0.0, b = hi;
      for (int i = 0; i < 100; ++i) {
        const double m = 0.5 * (a + b);
        if (cap_ok(m)) a = m; else b = m;
      }
      hi = a;
    }
  }
  if (hi < 0.0) return std::nullopt;

  double lo = 0.0;
  if (any_off) {
    // Thresholds fall as t grows, so the power caps and the SIC margin cut
    // away a prefix of the interval; bisect for its edge.
    const auto ok = [&](double t) {
      if (t <= 0.0) return false;
      if (scheme == Scheme::noma && regime == Regime::finite) {
        if (sic_margin(rho1, rho2, t, cfg, ue1, ue2) <= kMarginGuard) {
          return false;
        }
      }
      const Decision dec{rho1, rho2, t, d};
      const PowerSolution ps = min_powers(scheme, regime, dec, cfg, ue1, ue2);
      return ps.p1 <= ue1.P_max && ps.p2 <= ue2.P_max;
    };
    if (!ok(hi)) return std::nullopt;
    double a = 0.0, b = hi;
    for (int i = 0; i < 100; ++i) {
      const double m = 0.5 * (a + b);
      if (ok(m)) b = m; else a = m;
    }
    lo = b;
  }
  return Interval{lo, hi};
}

double solve_offload_time(Scheme scheme, Regime regime, double rho1,
                          double rho2, double d, const SystemConfig& cfg,
                          const UeProfile& ue1, const UeProfile& ue2,
                          double init_t) {
  const auto iv =
      feasible_time_interval(scheme, regime, rho1, rho2, d, cfg, ue1, ue2);
  if (!iv) {
    // Name the cut that emptied the interval: the cap shrinks it from above,
    // the margin and power caps from below.
    if (scheme == Scheme::noma && regime == Regime::finite) {
      const double t_hi = (1.0 - cfg.t_guard) * cfg.T_max;
      if (rho1 * ue1.L > 0.0 || rho2 * ue2.L > 0.0) {
        if (sic_margin(rho1, rho2, t_hi, cfg, ue1, ue2) <= kMarginGuard) {
          throw InfeasibleError("sic-margin",
                                "solve_offload_time: margin infeasible at "
                                "every admissible t");
        }
      }
    }
    throw InfeasibleError("ue-power",
                          "solve_offload_time: no admissible offloading time");
  }
  const double lo = iv->lo, hi = iv->hi;
  if (rho1 * ue1.L == 0.0 && rho2 * ue2.L == 0.0) {
    return lo;  // objective does not depend on t; smallest by convention
  }
  const auto f = [&](double t) {
    const Decision dec{rho1, rho2, t, d};
    return total_energy(scheme, regime, dec, cfg, ue1, ue2).total;
  };
  double best = lo;
  double fb = kInf;
  const int m = kTimeScanPoints;
  for (int i = 0; i <= m; ++i) {
    const double t = lo + (hi - lo) * i / m;
    const double ft = f(t);
    if (ft < fb) { best = t; fb = ft; }
  }
  if (init_t >= lo && init_t <= hi) {
    const double ft = f(init_t);
    if (ft < fb) { best = init_t; fb = ft; }
  }
  const double h = (hi - lo) / m;
  const double a = std::max(lo, best - h);
  const double b = std::min(hi, best + h);
  if (b > a) {
    const double tg = golden_min(f, a, b, 1e-12);
    const double fg = f(tg);
    if (fg < fb) { best = tg; fb = fg; }
  }
  return best;
}

std::optional<Interval> feasible_location_interval(
    Scheme scheme, Regime regime, double rho1, double rho2, double t,
    const SystemConfig& cfg, const UeProfile& ue1, const UeProfile& ue2,
    double* a1_out, double* a2_out) {
  double lo = 0.0;
  double hi = scheme == Scheme::noma ? 0.5 * cfg.D : cfg.D;
  const auto [u1, u2] =
      scheme_thresholds(scheme, regime, rho1, rho2, t, cfg, ue1, ue2);
  // Normalized power coefficients a_k with p_k = a_k / hbar_k(d).
  double a1 = 0.0, a2 = 0.0;
  switch (scheme) {
    case Scheme::noma: {
      if (regime == Regime::infinite) {
        a1 = u1 * (u2 + 1.0);
        a2 = u2;
      } else {
        const double a = 1.0 - u1 * u2;
        if (a <= kMarginGuard) {
          // Success-branch coefficients; margin-violating points are later
          // rejected by the shared feasibility check in strict mode.
          a1 = u1 * (u2 + 1.0);
          a2 = u2;
        } else {
          const double e1 = ue1.eps;
          a1 = (1.0 - e1) * u1 * (u2 + 1.0) + e1 * u1 * (u2 + 1.0) / a;
          a2 = (1.0 - e1) * u2 + e1 * u2 * (u1 + 1.0) / a;
        }
      }
      break;
    }
    case Scheme::fdma:
      a1 = cfg.eta * u1;
      a2 = (1.0 - cfg.eta) * u2;
      break;
    case Scheme::tdma:
      a1 = u1;
      a2 = u2;
      break;
  }
  if (a1_out) *a1_out = a1;
  if (a2_out) *a2_out = a2;
  // p_k = a_k * B*N0*(H^2 + dist_k^2)/beta0 <= P_max inverts to a distance
  // cap around each UE.
  const double bn0 = cfg.B * cfg.N0;
  if (a1 > 0.0) {
    const double arg = ue1.P_max * cfg.beta0 / (bn0 * a1) - cfg.H * cfg.H;
    if (arg < 0.0) return std::nullopt;
    hi = std::min(hi, std::sqrt(arg));
  }
  if (a2 > 0.0) {
    const double arg = ue2.P_max * cfg.beta0 / (bn0 * a2) - cfg.H * cfg.H;
    if (arg < 0.0) return std::nullopt;
    lo = std::max(lo, cfg.D - std::sqrt(arg));
  }
  if (lo > hi) return std::nullopt;
  return Interval{lo, hi};
}

double solve_uav_location(Scheme scheme, Regime regime, double rho1,
                          double rho2, double t, const SystemConfig& cfg,
                          const UeProfile& ue1, const UeProfile& ue2) {
  double a1 = 0.0, a2 = 0.0;
  const auto iv = feasible_location_interval(scheme, regime, rho1, rho2, t,
                                             cfg, ue1, ue2, &a1, &a2);
  if (!iv) {
    throw InfeasibleError(
        "ue-power", "solve_uav_location: power caps unreachable at every d");
  }
  const double lo = iv->lo, hi = iv->hi;
  if (a1 == 0.0 && a2 == 0.0) return lo;  // nothing transmitted
  if (scheme == Scheme::noma && regime == Regime::finite) {
    // The weighted-distance objective is quadratic in d, so the minimizer
    // splits the span by the coefficient ratio.
    return std::clamp(a2 * cfg.D / (a1 + a2), lo, hi);
  }
  const double w1 = off_weight1(scheme, cfg);
  const double w2 = off_weight2(scheme, cfg);
  const auto g = [&](double d) {
    const ChannelState ch = channel_gains(d, cfg);
    return w1 * a1 / ch.hbar1 + w2 * a2 / ch.hbar2;
  };
  return golden_min(g, lo, hi, 1e-6);
}

Decision default_init(Scheme scheme, Regime regime, const SystemConfig& cfg,
                      const UeProfile& ue1, const UeProfile& ue2) {
  const double lo1 = rho_lower_bound(cfg, ue1);
  const double lo2 = rho_lower_bound(cfg, ue2);
  double r1 = clamp01(0.5, lo1);
  double r2 = clamp01(0.5, lo2);
  const double d = 0.25 * cfg.D;
  auto iv = feasible_time_interval(scheme, regime, r1, r2, d, cfg, ue1, ue2);
  if (!iv) {
    r1 = lo1; r2 = lo2;
    iv = feasible_time_interval(scheme, regime, r1, r2, d, cfg, ue1, ue2);
    if (!iv) {
      throw InfeasibleError("init", "default_init: no feasible start");
    }
  }
  const double t = std::clamp(0.5 * cfg.T_max, iv->lo, iv->hi);
  return Decision{r1, r2, t, d};
}

OptResult bcd_solve(Scheme scheme, Regime regime, const SystemConfig& cfg,
                    const UeProfile& ue1, const UeProfile& ue2,
                    const Decision& init, const BcdOptions& opts) {
  double r1 = init.rho1, r2 = init.rho2, t = init.t, d = init.d;
  if (opts.fix_rho) {
    r1 = clamp01(*opts.fix_rho, rho_lower_bound(cfg, ue1));
    r2 = clamp01(*opts.fix_rho, rho_lower_bound(cfg, ue2));
    const auto iv =
        feasible_time_interval(scheme, regime, r1, r2, d, cfg, ue1, ue2);
    if (!iv) {
      throw InfeasibleError("fixed-rho",
                            "bcd_solve: fixed task split admits no time");
    }
    t = std::clamp(t, iv->lo, iv->hi);
  }
  if (opts.fix_t) t = *opts.fix_t;

  const Decision start{r1, r2, t, d};
  if (!is_feasible(scheme, regime, start, cfg, ue1, ue2)) {
    const ConstraintReport rep =
        check_constraints(scheme, regime, start, cfg, ue1, ue2);
    for (const auto& e : rep.entries) {
      if (!e.satisfied) {
        throw InfeasibleError(
            e.id, std::string("bcd_solve: infeasible init (") + e.id + ")");
      }
    }
    throw InfeasibleError("init", "bcd_solve: infeasible init");
  }

  OptResult res;
  double energy =
      total_energy(scheme, regime, start, cfg, ue1, ue2).total;
  res.trace.push_back(energy);
  for (int i = 0; i < opts.max_outer; ++i) {
    res.iterations = i + 1;
    if (!opts.fix_rho) {
      std::tie(r1, r2) =
          solve_task_split(scheme, regime, t, d, cfg, ue1, ue2, {r1, r2});
    }
    if (!opts.fix_t) {
      t = solve_offload_time(scheme, regime, r1, r2, d, cfg, ue1, ue2, t);
    }
    // Keep the incumbent location when the closed form or line search does
    // not actually improve at the new (rho, t).
    const double dn =
        solve_uav_location(scheme, regime, r1, r2, t, cfg, ue1, ue2);
    const double e_new =
        total_energy(scheme, regime, {r1, r2, t, dn}, cfg, ue1, ue2).total;
    const double e_old =
        total_energy(scheme, regime, {r1, r2, t, d}, cfg, ue1, ue2).total;
    double e_next = e_old;
    if (e_new <= e_old) {
      d = dn;
      e_next = e_new;
    }
    res.trace.push_back(e_next);
    if (std::fabs(e_next - energy) <= cfg.sigma_conv * std::fabs(energy)) {
      energy = e_next;
      res.converged = true;
      break;
    }
    energy = e_next;
  }
  res.decision = {r1, r2, t, d};
  res.energy = total_energy(scheme, regime, res.decision, cfg, ue1, ue2);
  return res;
}

OptResult bcd_solve_multistart(Scheme scheme, Regime regime,
                               const SystemConfig& cfg, const UeProfile& ue1,
                               const UeProfile& ue2, const BcdOptions& opts) {
  // Exact coordinate descent can lock onto the SIC margin curve at a point
  // determined by the initial offloading time, so a fixed ladder of starts
  // (the default half-deadline first) keeps the search out of poor basins.
  static constexpr double kTimeFractions[] = {0.5, 0.1, 0.15,
                                              0.2, 0.3, 0.4, 0.7};
  const double lo1 = rho_lower_bound(cfg, ue1);
  const double lo2 = rho_lower_bound(cfg, ue2);
  bool have_best = false;
  OptResult best;
  std::optional<InfeasibleError> first_err;
  for (const double tf : kTimeFractions) {
    double r1 = clamp01(0.5, lo1);
    double r2 = clamp01(0.5, lo2);
    const double d0 = 0.25 * cfg.D;
    auto iv =
        feasible_time_interval(scheme, regime, r1, r2, d0, cfg, ue1, ue2);
    if (!iv) {
      r1 = lo1; r2 = lo2;
      iv = feasible_time_interval(scheme, regime, r1, r2, d0, cfg, ue1, ue2);
      if (!iv) continue;
    }
    const double t0 = std::clamp(tf * cfg.T_max, iv->lo, iv->hi);
    try {
      OptResult res = bcd_solve(scheme, regime, cfg, ue1, ue2,
                                {r1, r2, t0, d0}, opts);
      if (!have_best || res.energy.total < best.energy.total) {
        best = std::move(res);
        have_best = true;
      }
    } catch (const InfeasibleError& e) {
      if (!first_err) first_err = e;
    } catch (const SicInfeasibleError& e) {
      if (!first_err) first_err.emplace("sic-margin", e.what());
    } catch (const InfeasibleTimeError& e) {
      if (!first_err) first_err.emplace("t-guard", e.what());
    }
    if (opts.fix_t) break;  // the start time is overridden; one run suffices
  }
  if (!have_best) {
    if (first_err) throw *first_err;
    throw InfeasibleError("init", "bcd_solve_multistart: no feasible start");
  }
  return best;
}

}  // namespace uavmec
