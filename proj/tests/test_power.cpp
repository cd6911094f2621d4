#include <cmath>

#include "doctest.h"
#include "uavmec/model.hpp"
#include "uavmec/power.hpp"

using namespace uavmec;

namespace {

// Reference operating point used throughout: equal halves of the stock task
// over a 0.3 ms window with the UAV a quarter of the way across.
SystemConfig narrow_cfg() {
  SystemConfig cfg;
  cfg.B = 0.5e6;
  return cfg;
}
const Decision kRef{0.5, 0.5, 0.3e-3, 25.0};

}  // namespace

TEST_CASE("per-scheme symbol budgets shape the thresholds") {
  const SystemConfig cfg;
  const UeProfile ue;
  const auto [n1, n2] = scheme_thresholds(Scheme::noma, Regime::finite, 0.5,
                                          0.5, 0.3e-3, cfg, ue, ue);
  const auto [f1, f2] = scheme_thresholds(Scheme::fdma, Regime::finite, 0.5,
                                          0.5, 0.3e-3, cfg, ue, ue);
  const auto [t1, t2] = scheme_thresholds(Scheme::tdma, Regime::finite, 0.5,
                                          0.5, 0.3e-3, cfg, ue, ue);
  CHECK(n1 == n2);  // symmetric loads over the shared block
  CHECK(f1 > n1);   // halved resources raise the bar
  CHECK(f1 == t1);  // eta = delta = 0.5 gives identical budgets
  CHECK(f2 == t2);
  CHECK(n1 == doctest::Approx(snr_threshold(Regime::finite, 600.0,
                                            cfg.B * 0.3e-3, ue.eps))
                  .epsilon(1e-14));
}

TEST_CASE("noma infinite-regime powers at the reference point") {
  const SystemConfig cfg = narrow_cfg();
  const UeProfile ue;
  const PowerSolution ps =
      min_powers(Scheme::noma, Regime::infinite, kRef, cfg, ue, ue);
  CHECK(ps.p1 == doctest::Approx(0.0047209702942281424).epsilon(1e-12));
  CHECK(ps.p2 == doctest::Approx(0.00076715767281207306).epsilon(1e-12));
  CHECK(!ps.noma_branches.has_value());

  // The construction is tight: recomputed SINRs hit the thresholds and the
  // rates return exactly the offloaded bits.
  const ChannelState ch = channel_gains(kRef.d, cfg);
  const double g1 = ps.p1 * ch.hbar1 / (ps.p2 * ch.hbar2 + 1.0);
  const double g2 = ps.p2 * ch.hbar2;
  CHECK(rate_infinite(g1, cfg.B * kRef.t) ==
        doctest::Approx(600.0).epsilon(1e-9));
  CHECK(rate_infinite(g2, cfg.B * kRef.t) ==
        doctest::Approx(600.0).epsilon(1e-9));
}

TEST_CASE("fdma and tdma powers at the reference point") {
  const SystemConfig cfg = narrow_cfg();
  const UeProfile ue;
  const PowerSolution f =
      min_powers(Scheme::fdma, Regime::infinite, kRef, cfg, ue, ue);
  const PowerSolution t =
      min_powers(Scheme::tdma, Regime::infinite, kRef, cfg, ue, ue);
  CHECK(f.p1 == doctest::Approx(0.0025080154688087004).epsilon(1e-12));
  CHECK(f.p2 == doctest::Approx(0.00652084021890262).epsilon(1e-12));
  CHECK(t.p1 == doctest::Approx(0.0050160309376174007).epsilon(1e-12));
  CHECK(t.p2 == doctest::Approx(0.01304168043780524).epsilon(1e-12));
  // Same thresholds at eta = delta = 0.5, so FDMA transmits at half the
  // TDMA power and both split across users by the channel ratio.
  CHECK(f.p1 == doctest::Approx(0.5 * t.p1).epsilon(1e-14));
  const ChannelState ch = channel_gains(kRef.d, cfg);
  CHECK(t.p1 / t.p2 == doctest::Approx(ch.hbar2 / ch.hbar1).epsilon(1e-12));

  const double gf1 = f.p1 * ch.hbar1 / cfg.eta;
  CHECK(rate_infinite(gf1, cfg.eta * cfg.B * kRef.t) ==
        doctest::Approx(600.0).epsilon(1e-9));
  const double gt2 = t.p2 * ch.hbar2;
  CHECK(rate_infinite(gt2, (1.0 - cfg.delta) * cfg.B * kRef.t) ==
        doctest::Approx(600.0).epsilon(1e-9));
}

TEST_CASE("noma finite-regime branch powers and round trips") {
  const SystemConfig cfg;  // B = 3 MHz keeps the margin healthy
  const UeProfile ue;
  const PowerSolution ps =
      min_powers(Scheme::noma, Regime::finite, kRef, cfg, ue, ue);
  REQUIRE(ps.noma_branches.has_value());
  const NomaBranches& br = *ps.noma_branches;
  CHECK(br.p_check1 > br.p_hat1);
  CHECK(br.p_check2 > br.p_hat2);
  CHECK(ps.p1 == doctest::Approx((1.0 - ue.eps) * br.p_hat1 +
                                 ue.eps * br.p_check1)
                     .epsilon(1e-14));
  CHECK(ps.p2 == doctest::Approx((1.0 - ue.eps) * br.p_hat2 +
                                 ue.eps * br.p_check2)
                     .epsilon(1e-14));

  const ChannelState ch = channel_gains(kRef.d, cfg);
  const double n = cfg.B * kRef.t;
  const double gh1 = br.p_hat1 * ch.hbar1 / (br.p_hat2 * ch.hbar2 + 1.0);
  const double gh2 = br.p_hat2 * ch.hbar2;
  const double gc1 = br.p_check1 * ch.hbar1 / (br.p_check2 * ch.hbar2 + 1.0);
  const double gc2 = br.p_check2 * ch.hbar2 / (br.p_check1 * ch.hbar1 + 1.0);
  for (double g : {gh1, gc1}) {
    CHECK(rate_finite(g, n, ue.eps) == doctest::Approx(600.0).epsilon(1e-9));
  }
  for (double g : {gh2, gc2}) {
    CHECK(rate_finite(g, n, ue.eps) == doctest::Approx(600.0).epsilon(1e-9));
  }
}

TEST_CASE("normalized powers and margin at the wide-block reference") {
  const SystemConfig cfg;
  const UeProfile ue;
  const Decision dec{0.5, 0.5, 1e-3, 25.0};  // N = 3000 symbols
  const PowerSolution ps =
      min_powers(Scheme::noma, Regime::finite, dec, cfg, ue, ue);
  REQUIRE(ps.noma_branches.has_value());
  const ChannelState ch = channel_gains(dec.d, cfg);
  CHECK(ps.noma_branches->p_hat1 * ch.hbar1 ==
        doctest::Approx(0.30014709141306667).epsilon(1e-12));
  CHECK(ps.noma_branches->p_check1 * ch.hbar1 ==
        doctest::Approx(0.31877234775214258).epsilon(1e-12));
  CHECK(ps.margin == doctest::Approx(0.94157191967743159).epsilon(1e-12));
  CHECK(sic_margin(0.5, 0.5, 1e-3, cfg, ue, ue) ==
        doctest::Approx(0.94157191967743159).epsilon(1e-12));
}

TEST_CASE("zero offload zeroes the powers") {
  const SystemConfig cfg;
  const UeProfile ue;
  const PowerSolution none = min_powers(
      Scheme::noma, Regime::finite, {0.0, 0.0, 0.3e-3, 25.0}, cfg, ue, ue);
  CHECK(none.p1 == 0.0);
  CHECK(none.p2 == 0.0);
  // One-sided offload: the silent UE vanishes from the margin and from the
  // interference terms, so both branches coincide for the active one.
  const PowerSolution one = min_powers(
      Scheme::noma, Regime::finite, {0.0, 0.5, 0.3e-3, 25.0}, cfg, ue, ue);
  CHECK(one.p1 == 0.0);
  REQUIRE(one.noma_branches.has_value());
  CHECK(one.noma_branches->p_hat2 ==
        doctest::Approx(one.noma_branches->p_check2).epsilon(1e-14));
}

TEST_CASE("margin guard separates strict from success-only evaluation") {
  const SystemConfig cfg;
  const UeProfile ue;
  const Decision tight{0.5, 0.5, 1e-4, 25.0};  // N = 300, thresholds > 1
  REQUIRE(sic_margin(0.5, 0.5, 1e-4, cfg, ue, ue) < 0.0);
  CHECK_THROWS_AS(
      min_powers(Scheme::noma, Regime::finite, tight, cfg, ue, ue),
      SicInfeasibleError);
  const PowerSolution ps = min_powers(Scheme::noma, Regime::finite, tight,
                                      cfg, ue, ue, EvalMode::success_only);
  CHECK(ps.success_only);
  CHECK(ps.p1 > 0.0);
  CHECK(!ps.noma_branches.has_value());
}

TEST_CASE("powers fall as the window grows") {
  const SystemConfig cfg;
  const UeProfile ue;
  for (const Scheme s : {Scheme::noma, Scheme::fdma, Scheme::tdma}) {
    double prev1 = 1e9, prev2 = 1e9;
    for (double t : {0.3e-3, 0.5e-3, 0.7e-3, 0.9e-3}) {
      const PowerSolution ps = min_powers(s, Regime::finite,
                                          {0.5, 0.5, t, 25.0}, cfg, ue, ue);
      CHECK(ps.p1 < prev1);
      CHECK(ps.p2 < prev2);
      prev1 = ps.p1;
      prev2 = ps.p2;
    }
  }
}

TEST_CASE("margin shrinks as the loads grow") {
  const SystemConfig cfg;
  const UeProfile ue;
  double prev = 1.0;
  for (double rho : {0.2, 0.4, 0.6, 0.8, 1.0}) {
    const double m = sic_margin(rho, rho, 0.3e-3, cfg, ue, ue);
    CHECK(m < prev);
    prev = m;
  }
}
