#include "uavmec/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "uavmec/energy.hpp"
#include "uavmec/oracle.hpp"
#include "uavmec/optimize.hpp"
#include "uavmec/power.hpp"

namespace uavmec {

namespace {

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::vector<double> grid_values(const SweepSpec& spec) {
  if (spec.steps < 1) throw DomainError("sweep: steps must be >= 1");
  if (spec.steps == 1) return {spec.from};
  if (spec.log_spaced && (spec.from <= 0.0 || spec.to <= 0.0)) {
    throw DomainError("sweep: log spacing needs positive endpoints");
  }
  std::vector<double> vals;
  vals.reserve(spec.steps);
  for (int i = 0; i < spec.steps; ++i) {
    const double w = static_cast<double>(i) / (spec.steps - 1);
    if (spec.log_spaced) {
      vals.push_back(std::exp(std::log(spec.from) +
                              (std::log(spec.to) - std::log(spec.from)) * w));
    } else {
      vals.push_back(spec.from + (spec.to - spec.from) * w);
    }
  }
  return vals;
}

Scenario scenario_at(const Scenario& base, SweepParam param, double v) {
  Scenario sc = base;
  switch (param) {
    case SweepParam::L: sc.ue1.L = v; sc.ue2.L = v; break;
    case SweepParam::L2: sc.ue2.L = v; break;
    case SweepParam::T_max: sc.sys.T_max = v; break;
    case SweepParam::B: sc.sys.B = v; break;
    case SweepParam::eps: sc.ue1.eps = v; sc.ue2.eps = v; break;
    default: break;  // fixed-decision axes leave the scenario alone
  }
  return sc;
}

std::string failure_id(const std::exception& e) {
  if (const auto* ie = dynamic_cast<const InfeasibleError*>(&e)) {
    return ie->constraint_id;
  }
  if (dynamic_cast<const SicInfeasibleError*>(&e)) return "sic-margin";
  if (dynamic_cast<const InfeasibleTimeError*>(&e)) return "t-guard";
  return "infeasible";
}

void fill_energies(SweepRow& row, const EnergyBreakdown& eb) {
  row.e_loc1 = eb.e_loc1;
  row.e_rem1 = eb.e_rem1;
  row.e_off1 = eb.e_off1;
  row.e_loc2 = eb.e_loc2;
  row.e_rem2 = eb.e_rem2;
  row.e_off2 = eb.e_off2;
  row.e_total = eb.total;
  row.success_only = eb.sic_infeasible_evaluated_success_only;
}

SweepRow optimized_row(const Scenario& sc, Scheme s, Regime r,
                       const std::string& variant, const BcdOptions& opts) {
  SweepRow row;
  row.scheme = s;
  row.regime = r;
  row.variant = variant;
  try {
    const OptResult res =
        bcd_solve_multistart(s, r, sc.sys, sc.ue1, sc.ue2, opts);
    row.decision = res.decision;
    row.iterations = res.iterations;
    fill_energies(row, res.energy);
    const PowerSolution ps =
        min_powers(s, r, res.decision, sc.sys, sc.ue1, sc.ue2);
    row.p1 = ps.p1;
    row.p2 = ps.p2;
  } catch (const std::exception& e) {
    row.status = failure_id(e);
  }
  return row;
}

SweepRow fixed_row(const Scenario& sc, Scheme s, Regime r, const Decision& dec,
                   EvalMode mode) {
  SweepRow row;
  row.scheme = s;
  row.regime = r;
  row.variant = "fixed";
  row.decision = dec;
  try {
    fill_energies(row,
                  total_energy(s, r, dec, sc.sys, sc.ue1, sc.ue2, mode));
    const PowerSolution ps =
        min_powers(s, r, dec, sc.sys, sc.ue1, sc.ue2, mode);
    row.p1 = ps.p1;
    row.p2 = ps.p2;
    // The energies above are real regardless; the status flags a frozen
    // decision that violates some constraint so downstream filtering stays
    // possible.
    const ConstraintReport rep =
        check_constraints(s, r, dec, sc.sys, sc.ue1, sc.ue2, mode);
    for (const auto& entry : rep.entries) {
      if (!entry.satisfied) {
        row.status = entry.id;
        break;
      }
    }
  } catch (const std::exception& e) {
    row.status = failure_id(e);
  }
  return row;
}

}  // namespace

bool parse_sweep_param(const std::string& text, SweepParam& out) {
  if (text == "L") out = SweepParam::L;
  else if (text == "L2") out = SweepParam::L2;
  else if (text == "T_max") out = SweepParam::T_max;
  else if (text == "B") out = SweepParam::B;
  else if (text == "eps") out = SweepParam::eps;
  else if (text == "rho2") out = SweepParam::rho2_fixed;
  else if (text == "d") out = SweepParam::d_fixed;
  else return false;
  return true;
}

const char* to_string(SweepParam p) {
  switch (p) {
    case SweepParam::L: return "L";
    case SweepParam::L2: return "L2";
    case SweepParam::T_max: return "T_max";
    case SweepParam::B: return "B";
    case SweepParam::eps: return "eps";
    case SweepParam::rho2_fixed: return "rho2";
    case SweepParam::d_fixed: return "d";
  }
  return "?";
}

std::vector<SweepRow> run_sweep(const Scenario& sc, const SweepSpec& spec,
                                const std::vector<Scheme>& schemes,
                                const std::vector<Regime>& regimes,
                                EvalMode mode, const FixedDecision* fixed) {
  const std::vector<double> values = grid_values(spec);
  const bool fixed_axis = spec.param == SweepParam::rho2_fixed ||
                          spec.param == SweepParam::d_fixed;
  const FixedDecision defaults;
  const FixedDecision* fd = fixed ? fixed : (fixed_axis ? &defaults : nullptr);

  std::vector<SweepRow> rows;
  rows.reserve(values.size() * schemes.size() * regimes.size());
  for (const double v : values) {
    const Scenario cell = scenario_at(sc, spec.param, v);
    for (const Scheme s : schemes) {
      for (const Regime r : regimes) {
        SweepRow row;
        if (fd) {
          Decision dec{fd->rho1, fd->rho2, fd->t,
                       fd->d < 0.0 ? 0.5 * cell.sys.D : fd->d};
          if (spec.param == SweepParam::rho2_fixed) dec.rho2 = v;
          if (spec.param == SweepParam::d_fixed) dec.d = v;
          row = fixed_row(cell, s, r, dec, mode);
        } else {
          row = optimized_row(cell, s, r, "opt", {});
        }
        row.sweep_value = v;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::vector<SweepRow> run_benchmarks(const Scenario& sc,
                                     const std::vector<Scheme>& schemes,
                                     const std::vector<Regime>& regimes) {
  std::vector<SweepRow> rows;
  for (const Scheme s : schemes) {
    for (const Regime r : regimes) {
      rows.push_back(optimized_row(sc, s, r, "full", {}));
      BcdOptions fr;
      fr.fix_rho = 0.5;
      rows.push_back(optimized_row(sc, s, r, "fixed-rho", fr));
      BcdOptions ft;
      ft.fix_t = 0.5 * sc.sys.T_max;
      rows.push_back(optimized_row(sc, s, r, "fixed-t", ft));

      SweepRow grid;
      grid.scheme = s;
      grid.regime = r;
      grid.variant = "grid";
      try {
        const OptResult res =
            grid_search(s, r, sc.sys, sc.ue1, sc.ue2, GridSpec{});
        grid.decision = res.decision;
        grid.iterations = res.iterations;
        fill_energies(grid, res.energy);
        const PowerSolution ps =
            min_powers(s, r, res.decision, sc.sys, sc.ue1, sc.ue2);
        grid.p1 = ps.p1;
        grid.p2 = ps.p2;
      } catch (const std::exception& e) {
        grid.status = failure_id(e);
      }
      rows.push_back(std::move(grid));
    }
  }
  return rows;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "sweep_value,scheme,regime,variant,status,rho1,rho2,t,d,p1,p2,"
      "e_loc1,e_rem1,e_off1,e_loc2,e_rem2,e_off2,e_total,success_only,"
      "iterations\n";
  for (const auto& r : rows) {
    out += fmt(r.sweep_value);
    out += ',';
    out += to_string(r.scheme);
    out += ',';
    out += to_string(r.regime);
    out += ',';
    out += r.variant;
    out += ',';
    out += r.status;
    for (const double x : {r.decision.rho1, r.decision.rho2, r.decision.t,
                           r.decision.d, r.p1, r.p2, r.e_loc1, r.e_rem1,
                           r.e_off1, r.e_loc2, r.e_rem2, r.e_off2,
                           r.e_total}) {
      out += ',';
      out += fmt(x);
    }
    out += ',';
    out += r.success_only ? '1' : '0';
    out += ',';
    out += std::to_string(r.iterations);
    out += '\n';
  }
  return out;
}

void write_csv(const std::string& path, const std::vector<SweepRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_csv(rows);
}

void write_meta(const std::string& csv_path, const Scenario& sc,
                EvalMode mode, const std::string& description) {
  std::ofstream out(csv_path + ".meta", std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + csv_path + ".meta");
  out << "version=" << kVersion << '\n';
  out << "description=" << description << '\n';
  out << "eval_mode=" << to_string(mode) << '\n';
  const SystemConfig& s = sc.sys;
  out << "D=" << fmt(s.D) << '\n'
      << "H=" << fmt(s.H) << '\n'
      << "beta0=" << fmt(s.beta0) << '\n'
      << "N0=" << fmt(s.N0) << '\n'
      << "B=" << fmt(s.B) << '\n'
      << "T_max=" << fmt(s.T_max) << '\n'
      << "f_U_max=" << fmt(s.f_U_max) << '\n'
      << "kappa_U=" << fmt(s.kappa_U) << '\n'
      << "eta=" << fmt(s.eta) << '\n'
      << "delta=" << fmt(s.delta) << '\n'
      << "V=" << fmt(s.V) << '\n'
      << "sigma_conv=" << fmt(s.sigma_conv) << '\n'
      << "t_guard=" << fmt(s.t_guard) << '\n';
  const auto ue = [&](const char* tag, const UeProfile& u) {
    out << tag << ".L=" << fmt(u.L) << '\n'
        << tag << ".c=" << fmt(u.c) << '\n'
        << tag << ".kappa=" << fmt(u.kappa) << '\n'
        << tag << ".f_max=" << fmt(u.f_max) << '\n'
        << tag << ".P_max=" << fmt(u.P_max) << '\n'
        << tag << ".eps=" << fmt(u.eps) << '\n';
  };
  ue("ue1", sc.ue1);
  ue("ue2", sc.ue2);
}

}  // namespace uavmec
