#include <cmath>

#include "doctest.h"
#include "uavmec/compare.hpp"
#include "uavmec/energy.hpp"
#include "uavmec/model.hpp"
#include "uavmec/power.hpp"

using namespace uavmec;

TEST_CASE("ab fields match frozen references") {
  const AbFields sym = ab_fields(600.0, 600.0, 300.0, 1e-5, 1e-5);
  CHECK(sym.A == doctest::Approx(-15.948571621193569).epsilon(1e-12));
  CHECK(sym.B == doctest::Approx(3.5168142873689057).epsilon(1e-12));

  // With the zero-bits override, an idle plane point is trivially safe.
  const AbFields idle = ab_fields(0.0, 0.0, 300.0, 1e-5, 1e-5);
  CHECK(idle.A == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(idle.B == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));

  const AbFields one = ab_fields(1200.0, 0.0, 300.0, 1e-5, 1e-5);
  CHECK(one.B == doctest::Approx(-161.3611739489285).epsilon(1e-12));
}

TEST_CASE("literal thresholds charge the dispersion floor") {
  const AbFields idle = ab_fields(0.0, 0.0, 300.0, 1e-5, 1e-5, false);
  CHECK(idle.A == doctest::Approx(0.92204828698206198).epsilon(1e-12));
  CHECK(idle.B == doctest::Approx(0.21979479880932873).epsilon(1e-12));

  const AbFields one = ab_fields(1200.0, 0.0, 300.0, 1e-5, 1e-5, false);
  CHECK(one.A == doctest::Approx(-4.4353609478048215).epsilon(1e-12));
  CHECK(one.B == doctest::Approx(-155.854891458228).epsilon(1e-12));

  CHECK_THROWS_AS(ab_fields(600.0, 600.0, 300.0, 0.7, 1e-5, false),
                  DomainError);
  CHECK_THROWS_AS(ab_fields(600.0, 600.0, 0.0, 1e-5, 1e-5, false),
                  DomainError);
}

TEST_CASE("symmetric gap field is positive wherever bits flow") {
  CHECK(delta_symmetric(600.0, 150.0, 1e-5) ==
        doctest::Approx(94.79583365073438).epsilon(1e-12));
  CHECK(delta_symmetric(0.0, 300.0, 1e-5) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
  for (const double rhoL : {1.0, 10.0, 100.0, 600.0, 1200.0}) {
    for (const double n : {100.0, 300.0, 1000.0}) {
      for (const double eps : {1e-5, 1e-3, 1e-1}) {
        CHECK(delta_symmetric(rhoL, n, eps) > 0.0);
      }
    }
  }
}

TEST_CASE("gap bound reconstructs from the success-branch powers") {
  const SystemConfig cfg;
  const UeProfile ue;
  const Decision dec{0.4, 0.6, 0.4e-3, 30.0};
  const DeltaResult dr =
      noma_fdma_finite_delta(dec, cfg, ue, ue, EvalMode::success_only);
  REQUIRE(dr.noma_feasible);

  const PowerSolution pn = min_powers(Scheme::noma, Regime::finite, dec, cfg,
                                      ue, ue, EvalMode::success_only);
  const PowerSolution pf =
      min_powers(Scheme::fdma, Regime::finite, dec, cfg, ue, ue);
  const double off_gap = dec.t * (pn.p1 + pn.p2 - pf.p1 - pf.p2);
  CHECK(dr.exact_gap == doctest::Approx(off_gap).epsilon(1e-9));

  // The bound differs from the success-branch gap by exactly
  // t * (1/hbar2 - 1/hbar1), a nonnegative slack while d <= D/2.
  const ChannelState ch = channel_gains(dec.d, cfg);
  const double slack = dec.t * (1.0 / ch.hbar2 - 1.0 / ch.hbar1);
  CHECK(slack >= 0.0);
  CHECK(dr.delta_bound ==
        doctest::Approx(off_gap + slack).epsilon(1e-9));
  CHECK(dr.delta_bound >= dr.exact_gap);
  CHECK(dr.delta_bound > 0.0);
}

TEST_CASE("delta reports noma infeasibility without dying") {
  const SystemConfig cfg;
  const UeProfile ue;
  const Decision dec{0.5, 0.5, 1e-4, 25.0};  // SIC margin is negative here
  const DeltaResult strict = noma_fdma_finite_delta(dec, cfg, ue, ue);
  CHECK(!strict.noma_feasible);
  CHECK(std::isnan(strict.exact_gap));
  CHECK(std::isfinite(strict.delta_bound));

  const DeltaResult succ =
      noma_fdma_finite_delta(dec, cfg, ue, ue, EvalMode::success_only);
  CHECK(succ.noma_feasible);
  CHECK(std::isfinite(succ.exact_gap));

  CHECK_THROWS_AS(noma_fdma_finite_delta({0.5, 0.5, 0.0, 25.0}, cfg, ue, ue),
                  DomainError);
}

TEST_CASE("scheme gap table solves every default cell") {
  const SystemConfig cfg;
  const UeProfile ue;
  const ComparisonReport rep =
      scheme_gaps(cfg, ue, ue, {Scheme::noma, Scheme::fdma, Scheme::tdma},
                  {Regime::infinite, Regime::finite});
  REQUIRE(rep.cells.size() == 6);
  for (const auto& c : rep.cells) {
    CHECK(c.ok);
    CHECK(c.status == "ok");
    CHECK(!c.bt_degenerate);
    CHECK(c.result.energy.total > 0.0);
  }
  // Orthogonal multiplexing wins at short blocklength; TDMA edges out FDMA.
  CHECK(rep.gap(Scheme::noma, Scheme::fdma, Regime::finite) > 0.0);
  CHECK(rep.gap(Scheme::tdma, Scheme::fdma, Regime::finite) <= 0.0);
  // Infinite-blocklength NOMA is never worse than FDMA (small slack for
  // the solver's convergence tolerance).
  CHECK(rep.gap(Scheme::noma, Scheme::fdma, Regime::infinite) <= 1e-7);

  CHECK(rep.find(Scheme::noma, Regime::finite) != nullptr);
  const ComparisonReport small =
      scheme_gaps(cfg, ue, ue, {Scheme::noma}, {Regime::finite});
  CHECK(small.find(Scheme::fdma, Regime::finite) == nullptr);
  CHECK(std::isnan(small.gap(Scheme::noma, Scheme::fdma, Regime::finite)));
}
