#include "uavmec/scenario.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace uavmec {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// A value is a number plus an optional unit token. dB-family suffixes
// convert on the spot; bare SI markers just document the unit.
double parse_value(const std::string& raw, int line, const std::string& key) {
  const char* begin = raw.c_str();
  char* end = nullptr;
  const double x = std::strtod(begin, &end);
  if (end == begin) {
    throw ParseError(line, "malformed number for key '" + key + "'");
  }
  const std::string suffix = trim(std::string(end));
  if (suffix.empty()) return x;
  if (suffix == "dBmHz") return 1e-3 * std::pow(10.0, x / 10.0);
  if (suffix == "dB") return std::pow(10.0, x / 10.0);
  if (suffix == "W" || suffix == "Hz" || suffix == "s" || suffix == "m" ||
      suffix == "b" || suffix == "bits" || suffix == "cycles") {
    return x;
  }
  throw ParseError(line, "unknown unit suffix '" + suffix + "' for key '" +
                             key + "'");
}

bool apply_system(SystemConfig& sys, const std::string& key, double v) {
  if (key == "D") sys.D = v;
  else if (key == "H") sys.H = v;
  else if (key == "beta0") sys.beta0 = v;
  else if (key == "N0") sys.N0 = v;
  else if (key == "B") sys.B = v;
  else if (key == "T_max") sys.T_max = v;
  else if (key == "f_U_max") sys.f_U_max = v;
  else if (key == "kappa_U") sys.kappa_U = v;
  else if (key == "eta") sys.eta = v;
  else if (key == "delta") sys.delta = v;
  else if (key == "V") sys.V = v;
  else return false;
  return true;
}

bool apply_solver(SystemConfig& sys, const std::string& key, double v) {
  if (key == "sigma_conv") sys.sigma_conv = v;
  else if (key == "t_guard") sys.t_guard = v;
  else return false;
  return true;
}

bool apply_ue(UeProfile& ue, const std::string& key, double v) {
  if (key == "L") ue.L = v;
  else if (key == "c") ue.c = v;
  else if (key == "kappa") ue.kappa = v;
  else if (key == "f_max") ue.f_max = v;
  else if (key == "P_max") ue.P_max = v;
  else if (key == "eps") ue.eps = v;
  else return false;
  return true;
}

void require(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw ValidationError(field, "scenario field " + field + " " + what);
}

}  // namespace

Scenario default_scenario() { return Scenario{}; }

Scenario parse_scenario_text(const std::string& text) {
  Scenario sc;
  std::istringstream in(text);
  std::string rawline;
  std::string section;
  int line = 0;
  while (std::getline(in, rawline)) {
    ++line;
    const size_t cut = rawline.find_first_of("#;");
    if (cut != std::string::npos) rawline.erase(cut);
    const std::string s = trim(rawline);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ParseError(line, "unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      if (section != "system" && section != "ue1" && section != "ue2" &&
          section != "solver") {
        throw ParseError(line, "unknown section '" + section + "'");
      }
      continue;
    }
    const size_t eq = s.find('=');
    if (eq == std::string::npos) {
      throw ParseError(line, "expected 'key = value'");
    }
    const std::string key = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    if (key.empty()) throw ParseError(line, "empty key");
    if (section.empty()) {
      throw ParseError(line, "key '" + key + "' before any section header");
    }
    const double v = parse_value(val, line, key);
    bool known = false;
    if (section == "system") known = apply_system(sc.sys, key, v);
    else if (section == "solver") known = apply_solver(sc.sys, key, v);
    else if (section == "ue1") known = apply_ue(sc.ue1, key, v);
    else known = apply_ue(sc.ue2, key, v);
    if (!known) {
      throw ParseError(line, "unknown key '" + key + "' in section [" +
                                 section + "]");
    }
  }
  validate(sc);
  return sc;
}

Scenario parse_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

void validate(const Scenario& sc) {
  const SystemConfig& s = sc.sys;
  require(s.D > 0.0, "D", "must be > 0");
  require(s.H > 0.0, "H", "must be > 0");
  require(s.beta0 > 0.0, "beta0", "must be > 0");
  require(s.N0 > 0.0, "N0", "must be > 0");
  require(s.B > 0.0, "B", "must be > 0");
  require(s.T_max > 0.0, "T_max", "must be > 0");
  require(s.f_U_max > 0.0, "f_U_max", "must be > 0");
  require(s.kappa_U > 0.0, "kappa_U", "must be > 0");
  require(s.eta > 0.0 && s.eta < 1.0, "eta", "must lie in (0, 1)");
  require(s.delta > 0.0 && s.delta < 1.0, "delta", "must lie in (0, 1)");
  require(s.sigma_conv > 0.0, "sigma_conv", "must be > 0");
  require(s.t_guard >= 0.0 && s.t_guard < 1.0, "t_guard",
          "must lie in [0, 1)");
  require(s.V > 0.0, "V", "must be > 0");
  const auto check_ue = [&](const UeProfile& ue, const std::string& tag) {
    require(ue.L >= 0.0, tag + ".L", "must be >= 0");
    require(ue.c > 0.0, tag + ".c", "must be > 0");
    require(ue.kappa > 0.0, tag + ".kappa", "must be > 0");
    require(ue.f_max > 0.0, tag + ".f_max", "must be > 0");
    require(ue.P_max > 0.0, tag + ".P_max", "must be > 0");
    require(ue.eps > 0.0 && ue.eps < 0.5, tag + ".eps",
            "must lie in (0, 0.5)");
  };
  check_ue(sc.ue1, "ue1");
  check_ue(sc.ue2, "ue2");
}

}  // namespace uavmec
