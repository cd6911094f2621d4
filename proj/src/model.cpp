#include "uavmec/model.hpp"

#include <cmath>
#include <numbers>
#include <unordered_map>

namespace uavmec {

namespace {
constexpr double kLn2 = std::numbers::ln2;
constexpr double kSqrt2 = std::numbers::sqrt2;

double gaussian_tail(double x) { return 0.5 * std::erfc(x / kSqrt2); }
}  // namespace

const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::noma: return "noma";
    case Scheme::fdma: return "fdma";
    case Scheme::tdma: return "tdma";
  }
  return "?";
}

const char* to_string(Regime r) {
  return r == Regime::infinite ? "inf" : "fin";
}

const char* to_string(EvalMode m) {
  return m == EvalMode::strict ? "strict" : "success-only";
}

bool parse_scheme(const std::string& text, Scheme& out) {
  if (text == "noma") { out = Scheme::noma; return true; }
  if (text == "fdma") { out = Scheme::fdma; return true; }
  if (text == "tdma") { out = Scheme::tdma; return true; }
  return false;
}

bool parse_regime(const std::string& text, Regime& out) {
  if (text == "inf" || text == "infinite") { out = Regime::infinite; return true; }
  if (text == "fin" || text == "finite") { out = Regime::finite; return true; }
  return false;
}

bool parse_eval_mode(const std::string& text, EvalMode& out) {
  if (text == "strict") { out = EvalMode::strict; return true; }
  if (text == "success-only" || text == "success_only") {
    out = EvalMode::success_only;
    return true;
  }
  return false;
}

ChannelState channel_gains(double d, const SystemConfig& cfg) {
  if (!(d >= 0.0 && d <= cfg.D)) {
    throw DomainError("channel_gains: d outside [0, D]");
  }
  ChannelState ch;
  ch.h1 = cfg.beta0 / (cfg.H * cfg.H + d * d);
  ch.h2 = cfg.beta0 / (cfg.H * cfg.H + (cfg.D - d) * (cfg.D - d));
  const double bn0 = cfg.B * cfg.N0;
  ch.hbar1 = ch.h1 / bn0;
  ch.hbar2 = ch.h2 / bn0;
  return ch;
}

void remote_times(Scheme scheme, double t, const SystemConfig& cfg,
                  double& rt1, double& rt2) {
  if (scheme == Scheme::tdma) {
    // UE 1's slot ends after delta*t, so its remote window is longer.
    rt1 = cfg.T_max - cfg.delta * t;
    rt2 = cfg.T_max - t;
  } else {
    rt1 = cfg.T_max - t;
    rt2 = rt1;
  }
}

CpuSplit cpu_frequencies(Scheme scheme, double rho1, double rho2, double t,
                         const SystemConfig& cfg, const UeProfile& ue1,
                         const UeProfile& ue2) {
  CpuSplit out;
  out.f_loc1 = (1.0 - rho1) * ue1.c * ue1.L / cfg.T_max;
  out.f_loc2 = (1.0 - rho2) * ue2.c * ue2.L / cfg.T_max;
  double rt1 = 0.0, rt2 = 0.0;
  remote_times(scheme, t, cfg, rt1, rt2);
  const double load1 = rho1 * ue1.c * ue1.L;
  const double load2 = rho2 * ue2.c * ue2.L;
  if (load1 > 0.0) {
    if (rt1 <= 0.0) {
      throw InfeasibleTimeError("cpu_frequencies: UE 1 remote window empty");
    }
    out.f_rem1 = load1 / rt1;
  }
  if (load2 > 0.0) {
    if (rt2 <= 0.0) {
      throw InfeasibleTimeError("cpu_frequencies: UE 2 remote window empty");
    }
    out.f_rem2 = load2 / rt2;
  }
  return out;
}

CompEnergies computation_energies(Scheme scheme, double rho1, double rho2,
                                  double t, const SystemConfig& cfg,
                                  const UeProfile& ue1, const UeProfile& ue2) {
  CompEnergies out;
  // kappa * T * f^3 with f = load/T collapses to kappa * load^3 / T^2.
  const auto cube = [](double x) { return x * x * x; };
  out.e_loc1 =
      ue1.kappa * cube((1.0 - rho1) * ue1.c * ue1.L) / (cfg.T_max * cfg.T_max);
  out.e_loc2 =
      ue2.kappa * cube((1.0 - rho2) * ue2.c * ue2.L) / (cfg.T_max * cfg.T_max);
  double rt1 = 0.0, rt2 = 0.0;
  remote_times(scheme, t, cfg, rt1, rt2);
  const double load1 = rho1 * ue1.c * ue1.L;
  const double load2 = rho2 * ue2.c * ue2.L;
  if (load1 > 0.0) {
    if (rt1 <= 0.0) {
      throw InfeasibleTimeError(
          "computation_energies: UE 1 remote window empty");
    }
    out.e_rem1 = cfg.kappa_U * cube(load1) / (rt1 * rt1);
  }
  if (load2 > 0.0) {
    if (rt2 <= 0.0) {
      throw InfeasibleTimeError(
          "computation_energies: UE 2 remote window empty");
    }
    out.e_rem2 = cfg.kappa_U * cube(load2) / (rt2 * rt2);
  }
  return out;
}

double inverse_q(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw DomainError("inverse_q: eps outside (0, 1)");
  }
  // Distinct eps values are few per run while the threshold formula is
  // evaluated millions of times in grid scans, so memoize per thread.
  thread_local std::unordered_map<double, double> cache;
  if (auto it = cache.find(eps); it != cache.end()) return it->second;
  double lo = -40.0, hi = 40.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (gaussian_tail(mid) > eps) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-13) break;
  }
  const double x = 0.5 * (lo + hi);
  cache.emplace(eps, x);
  return x;
}

double snr_threshold(Regime regime, double rhoL, double n_or_bt, double eps,
                     double V) {
  if (rhoL == 0.0) return 0.0;  // no data, no transmission
  if (!(n_or_bt > 0.0)) {
    throw DomainError("snr_threshold: nonpositive blocklength");
  }
  if (regime == Regime::infinite) {
    return std::expm1(kLn2 * rhoL / n_or_bt);
  }
  if (!(eps > 0.0 && eps < 0.5)) {
    throw DomainError("snr_threshold: eps outside (0, 0.5)");
  }
  return std::expm1(kLn2 * rhoL / (n_or_bt * (1.0 - eps)) +
                    std::sqrt(V) * inverse_q(eps) / std::sqrt(n_or_bt));
}

double rate_infinite(double sinr, double bt) {
  return bt * std::log2(1.0 + sinr);
}

double rate_finite(double sinr, double n, double eps, double V) {
  return (1.0 - eps) * n *
         (std::log2(1.0 + sinr) -
          std::sqrt(V) * inverse_q(eps) / (std::sqrt(n) * kLn2));
}

}  // namespace uavmec
