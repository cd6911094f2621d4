#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uavmec/compare.hpp"
#include "uavmec/energy.hpp"
#include "uavmec/oracle.hpp"
#include "uavmec/optimize.hpp"
#include "uavmec/power.hpp"
#include "uavmec/scenario.hpp"
#include "uavmec/sweep.hpp"

namespace {

using namespace uavmec;

struct Selection {
  std::vector<std::string> scheme_names{"noma", "fdma", "tdma"};
  std::vector<std::string> regime_names{"inf", "fin"};
};

std::vector<Scheme> parse_schemes(const std::vector<std::string>& names) {
  std::vector<Scheme> out;
  for (const auto& n : names) {
    Scheme s;
    if (!parse_scheme(n, s)) {
      throw ValidationError("scheme", "unknown scheme: " + n);
    }
    out.push_back(s);
  }
  return out;
}

std::vector<Regime> parse_regimes(const std::vector<std::string>& names) {
  std::vector<Regime> out;
  for (const auto& n : names) {
    Regime r;
    if (!parse_regime(n, r)) {
      throw ValidationError("regime", "unknown regime: " + n);
    }
    out.push_back(r);
  }
  return out;
}

Scenario load_scenario(const std::string& config) {
  if (config.empty()) return default_scenario();
  return parse_scenario(config);
}

void print_breakdown(const EnergyBreakdown& eb) {
  std::printf("e_loc1=%.12g e_rem1=%.12g e_off1=%.12g\n", eb.e_loc1,
              eb.e_rem1, eb.e_off1);
  std::printf("e_loc2=%.12g e_rem2=%.12g e_off2=%.12g\n", eb.e_loc2,
              eb.e_rem2, eb.e_off2);
  std::printf("e_total=%.12g\n", eb.total);
  if (eb.sic_infeasible_evaluated_success_only) {
    std::printf("note=sic margin infeasible, success-only evaluation\n");
  }
}

void maybe_write(const std::string& out_path, const Scenario& sc,
                 EvalMode mode, const std::string& description,
                 const std::vector<SweepRow>& rows) {
  if (out_path.empty()) return;
  write_csv(out_path, rows);
  write_meta(out_path, sc, mode, description);
  std::printf("wrote %s (+ .meta)\n", out_path.c_str());
}

SweepRow result_row(const Scenario& sc, Scheme s, Regime r,
                    const OptResult& res, const std::string& variant) {
  SweepRow row;
  row.scheme = s;
  row.regime = r;
  row.variant = variant;
  row.decision = res.decision;
  row.iterations = res.iterations;
  row.e_loc1 = res.energy.e_loc1;
  row.e_rem1 = res.energy.e_rem1;
  row.e_off1 = res.energy.e_off1;
  row.e_loc2 = res.energy.e_loc2;
  row.e_rem2 = res.energy.e_rem2;
  row.e_off2 = res.energy.e_off2;
  row.e_total = res.energy.total;
  row.success_only = res.energy.sic_infeasible_evaluated_success_only;
  const PowerSolution ps = min_powers(s, r, res.decision, sc.sys, sc.ue1,
                                      sc.ue2, EvalMode::success_only);
  row.p1 = ps.p1;
  row.p2 = ps.p2;
  return row;
}

int run_main(int argc, char** argv) {
  CLI::App app{"Energy-minimal task offloading planner for a two-user "
               "UAV-assisted edge computing cell"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string config;
  app.add_option("--config", config, "scenario INI file (defaults built in)")
      ->check(CLI::ExistingFile);

  // run: solve one scheme/regime cell and print the plan.
  auto* run = app.add_subcommand("run", "optimize one scheme/regime cell");
  std::string run_scheme = "noma", run_regime = "fin";
  std::string run_out;
  run->add_option("--scheme", run_scheme, "noma|fdma|tdma");
  run->add_option("--regime", run_regime, "inf|fin");
  run->add_option("--out", run_out, "write the solved cell as CSV");

  // sweep: one parameter axis, all requested cells per point.
  auto* sweep = app.add_subcommand("sweep", "sweep one parameter");
  std::string sweep_param = "L";
  double sweep_from = 0.0, sweep_to = 0.0;
  int sweep_steps = 1;
  bool sweep_log = false, sweep_linear = false;
  Selection sweep_sel;
  std::string sweep_out;
  std::string sweep_mode = "strict";
  double fix_rho1 = -1.0, fix_t = -1.0, fix_d = -1.0;
  sweep->add_option("--param", sweep_param, "L|L2|T_max|B|eps|rho2|d")
      ->required();
  sweep->add_option("--from", sweep_from, "first value")->required();
  sweep->add_option("--to", sweep_to, "last value");
  sweep->add_option("--steps", sweep_steps, "grid points (>= 1)");
  sweep->add_flag("--log", sweep_log, "log-spaced grid (eps default)");
  sweep->add_flag("--linear", sweep_linear, "linear grid");
  sweep->add_option("--scheme", sweep_sel.scheme_names,
                    "schemes to run (default all)");
  sweep->add_option("--regime", sweep_sel.regime_names,
                    "regimes to run (default both)");
  sweep->add_option("--eval-mode", sweep_mode, "strict|success-only");
  sweep->add_option("--fix-rho1", fix_rho1,
                    "freeze rho1 and evaluate instead of optimizing");
  sweep->add_option("--fix-t", fix_t,
                    "freeze t and evaluate instead of optimizing");
  sweep->add_option("--fix-d", fix_d,
                    "freeze d and evaluate instead of optimizing");
  sweep->add_option("--out", sweep_out, "CSV output path");

  // benchmarks: the fixed-variable and exhaustive baselines.
  auto* bench = app.add_subcommand(
      "benchmarks", "full vs fixed-rho vs fixed-t vs grid baselines");
  Selection bench_sel;
  std::string bench_out;
  bench->add_option("--scheme", bench_sel.scheme_names,
                    "schemes to run (default all)");
  bench->add_option("--regime", bench_sel.regime_names,
                    "regimes to run (default both)");
  bench->add_option("--out", bench_out, "CSV output path");

  // compare: optimal energies side by side, plus pairwise gaps.
  auto* compare = app.add_subcommand(
      "compare", "optimal multiple-access energies side by side");
  Selection cmp_sel;
  std::string cmp_out;
  compare->add_option("--scheme", cmp_sel.scheme_names,
                      "schemes to run (default all)");
  compare->add_option("--regime", cmp_sel.regime_names,
                      "regimes to run (default both)");
  compare->add_option("--out", cmp_out, "CSV output path");

  // oracle: exhaustive grid baseline for one cell.
  auto* oracle = app.add_subcommand("oracle", "exhaustive grid baseline");
  std::string ora_scheme = "noma", ora_regime = "fin", ora_out;
  double rho_step = 0.02, t_step = 0.0;
  oracle->add_option("--scheme", ora_scheme, "noma|fdma|tdma");
  oracle->add_option("--regime", ora_regime, "inf|fin");
  oracle->add_option("--rho-step", rho_step, "task-split grid step");
  oracle->add_option("--t-step", t_step, "time grid step (<= 0: T_max/100)");
  oracle->add_option("--out", ora_out, "CSV output path");

  for (auto* sub : {run, sweep, bench, compare, oracle}) {
    sub->fallthrough();  // accept --config after the verb as well
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const Scenario sc = load_scenario(config);

  if (*run) {
    Scheme s;
    Regime r;
    if (!parse_scheme(run_scheme, s)) {
      throw ValidationError("scheme", "unknown scheme: " + run_scheme);
    }
    if (!parse_regime(run_regime, r)) {
      throw ValidationError("regime", "unknown regime: " + run_regime);
    }
    const OptResult res = bcd_solve_multistart(s, r, sc.sys, sc.ue1, sc.ue2);
    std::printf("scheme=%s regime=%s\n", to_string(s), to_string(r));
    std::printf("rho1=%.12g rho2=%.12g t=%.12g d=%.12g\n", res.decision.rho1,
                res.decision.rho2, res.decision.t, res.decision.d);
    const PowerSolution ps =
        min_powers(s, r, res.decision, sc.sys, sc.ue1, sc.ue2);
    std::printf("p1=%.12g p2=%.12g\n", ps.p1, ps.p2);
    print_breakdown(res.energy);
    std::printf("iterations=%d converged=%s\n", res.iterations,
                res.converged ? "yes" : "no");
    maybe_write(run_out, sc, EvalMode::strict, "single optimized cell",
                {result_row(sc, s, r, res, "opt")});
    return 0;
  }

  if (*sweep) {
    SweepSpec spec;
    if (!parse_sweep_param(sweep_param, spec.param)) {
      throw ValidationError("param", "unknown sweep parameter: " + sweep_param);
    }
    spec.from = sweep_from;
    spec.to = sweep->count("--to") ? sweep_to : sweep_from;
    spec.steps = sweep_steps;
    spec.log_spaced = sweep_log ||
                      (spec.param == SweepParam::eps && !sweep_linear);
    EvalMode mode;
    if (!parse_eval_mode(sweep_mode, mode)) {
      throw ValidationError("eval-mode", "unknown eval mode: " + sweep_mode);
    }
    FixedDecision fd;
    const bool any_fix = fix_rho1 >= 0.0 || fix_t >= 0.0 || fix_d >= 0.0;
    if (fix_rho1 >= 0.0) fd.rho1 = fix_rho1;
    if (fix_t >= 0.0) fd.t = fix_t;
    if (fix_d >= 0.0) fd.d = fix_d;
    const auto rows =
        run_sweep(sc, spec, parse_schemes(sweep_sel.scheme_names),
                  parse_regimes(sweep_sel.regime_names), mode,
                  any_fix ? &fd : nullptr);
    const std::string desc = std::string("sweep ") + to_string(spec.param);
    if (sweep_out.empty()) {
      std::fputs(to_csv(rows).c_str(), stdout);
    } else {
      maybe_write(sweep_out, sc, mode, desc, rows);
    }
    return 0;
  }

  if (*bench) {
    const auto rows = run_benchmarks(sc, parse_schemes(bench_sel.scheme_names),
                                     parse_regimes(bench_sel.regime_names));
    if (bench_out.empty()) {
      std::fputs(to_csv(rows).c_str(), stdout);
    } else {
      maybe_write(bench_out, sc, EvalMode::strict, "optimizer benchmarks",
                  rows);
    }
    return 0;
  }

  if (*compare) {
    const ComparisonReport rep =
        scheme_gaps(sc.sys, sc.ue1, sc.ue2, parse_schemes(cmp_sel.scheme_names),
                    parse_regimes(cmp_sel.regime_names));
    std::vector<SweepRow> rows;
    for (const auto& cell : rep.cells) {
      std::printf("scheme=%s regime=%s status=%s", to_string(cell.scheme),
                  to_string(cell.regime), cell.status.c_str());
      if (cell.ok) {
        std::printf(" e_total=%.12g t=%.12g d=%.12g%s",
                    cell.result.energy.total, cell.result.decision.t,
                    cell.result.decision.d,
                    cell.bt_degenerate ? " (degenerate blocklength)" : "");
        rows.push_back(result_row(sc, cell.scheme, cell.regime, cell.result,
                                  "opt"));
      }
      std::printf("\n");
    }
    for (const Regime r : parse_regimes(cmp_sel.regime_names)) {
      const double g_nf = rep.gap(Scheme::noma, Scheme::fdma, r);
      const double g_ft = rep.gap(Scheme::fdma, Scheme::tdma, r);
      std::printf("gap(noma-fdma,%s)=%.12g gap(fdma-tdma,%s)=%.12g\n",
                  to_string(r), g_nf, to_string(r), g_ft);
    }
    maybe_write(cmp_out, sc, EvalMode::strict, "scheme comparison", rows);
    return 0;
  }

  if (*oracle) {
    Scheme s;
    Regime r;
    if (!parse_scheme(ora_scheme, s)) {
      throw ValidationError("scheme", "unknown scheme: " + ora_scheme);
    }
    if (!parse_regime(ora_regime, r)) {
      throw ValidationError("regime", "unknown regime: " + ora_regime);
    }
    GridSpec spec;
    spec.rho_step = rho_step;
    spec.t_step = t_step;
    const OptResult res = grid_search(s, r, sc.sys, sc.ue1, sc.ue2, spec);
    std::printf("scheme=%s regime=%s feasible_points=%d\n", to_string(s),
                to_string(r), res.iterations);
    std::printf("rho1=%.12g rho2=%.12g t=%.12g d=%.12g\n", res.decision.rho1,
                res.decision.rho2, res.decision.t, res.decision.d);
    print_breakdown(res.energy);
    maybe_write(ora_out, sc, EvalMode::strict, "grid oracle",
                {result_row(sc, s, r, res, "grid")});
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error (line %d): %s\n", e.line, e.what());
    return 2;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "invalid %s: %s\n", e.field.c_str(), e.what());
    return 2;
  } catch (const InfeasibleError& e) {
    std::fprintf(stderr, "infeasible (%s): %s\n", e.constraint_id.c_str(),
                 e.what());
    return 3;
  } catch (const SicInfeasibleError& e) {
    std::fprintf(stderr, "infeasible (sic-margin): %s\n", e.what());
    return 3;
  } catch (const InfeasibleTimeError& e) {
    std::fprintf(stderr, "infeasible (t-guard): %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  }
}
