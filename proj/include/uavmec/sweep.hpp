#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uavmec/scenario.hpp"
#include "uavmec/types.hpp"

namespace uavmec {

// Sweep axes. L scales both task sizes, L2 only UE 2's; eps sets both UEs'
// error targets (log spacing by default); rho2_fixed and d_fixed evaluate a
// frozen decision instead of optimizing (isoline/crossover style sweeps).
enum class SweepParam { L, L2, T_max, B, eps, rho2_fixed, d_fixed };

bool parse_sweep_param(const std::string& text, SweepParam& out);
const char* to_string(SweepParam p);

struct SweepSpec {
  SweepParam param = SweepParam::L;
  double from = 0.0;
  double to = 0.0;
  int steps = 1;              // number of grid points (>= 1)
  bool log_spaced = false;    // defaulted to true for eps at the CLI
};

// Frozen decision for the fixed-decision sweeps; the swept coordinate is
// overwritten per cell. d < 0 means "use D/2".
struct FixedDecision {
  double rho1 = 0.5;
  double rho2 = 0.5;
  double t = 0.3e-3;
  double d = -1.0;
};

struct SweepRow {
  double sweep_value = 0.0;
  Scheme scheme = Scheme::noma;
  Regime regime = Regime::infinite;
  std::string variant = "opt";  // opt | fixed | full | fixed-rho | fixed-t | grid
  std::string status = "ok";    // "ok" or the per-cell failure id
  Decision decision;
  double p1 = 0.0, p2 = 0.0;
  double e_loc1 = 0.0, e_rem1 = 0.0, e_off1 = 0.0;
  double e_loc2 = 0.0, e_rem2 = 0.0, e_off2 = 0.0;
  double e_total = 0.0;
  bool success_only = false;
  int iterations = 0;
};

// One row per (sweep value x scheme x regime), in sweep-major order.
// Optimizing sweeps run the multi-start BCD per cell; fixed-decision sweeps
// evaluate total_energy at the frozen decision. Per-cell errors land in the
// row's status, never abort the sweep.
std::vector<SweepRow> run_sweep(const Scenario& sc, const SweepSpec& spec,
                                const std::vector<Scheme>& schemes,
                                const std::vector<Regime>& regimes,
                                EvalMode mode,
                                const FixedDecision* fixed = nullptr);

// Benchmark table: full optimization, fixed-rho (0.5, clamped into the CPU
// box), fixed-t (0.5*T_max), and the exhaustive grid, per scheme/regime.
std::vector<SweepRow> run_benchmarks(const Scenario& sc,
                                     const std::vector<Scheme>& schemes,
                                     const std::vector<Regime>& regimes);

// CSV with a fixed documented column order, %.12g numerics, and a header
// row; byte-identical for identical inputs.
std::string to_csv(const std::vector<SweepRow>& rows);
void write_csv(const std::string& path, const std::vector<SweepRow>& rows);

// Deterministic metadata sidecar (key=value lines) describing the scenario,
// tolerances, eval mode, and the sweep; written next to the CSV as
// <path>.meta.
void write_meta(const std::string& csv_path, const Scenario& sc,
                EvalMode mode, const std::string& description);

}  // namespace uavmec
