#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "uavmec/scenario.hpp"

using namespace uavmec;

TEST_CASE("empty text gives the stock scenario") {
  const Scenario def = default_scenario();
  const Scenario sc = parse_scenario_text("");
  CHECK(sc.sys.D == def.sys.D);
  CHECK(sc.sys.B == def.sys.B);
  CHECK(sc.sys.N0 == def.sys.N0);
  CHECK(sc.ue1.L == def.ue1.L);
  CHECK(sc.ue2.eps == def.ue2.eps);
  CHECK(def.sys.D == 100.0);
  CHECK(def.sys.T_max == 1e-3);
  CHECK(def.ue1.L == 1200.0);
}

TEST_CASE("sections assign their fields") {
  const Scenario sc = parse_scenario_text(
      "[system]\n"
      "D = 200 m\n"
      "B = 2e6 Hz\n"
      "eta = 0.4\n"
      "; semicolon comment\n"
      "[solver]\n"
      "sigma_conv = 1e-4\n"
      "t_guard = 2e-3\n"
      "[ue1]\n"
      "L = 900 bits   # trailing comment\n"
      "P_max = 0.2 W\n"
      "[ue2]\n"
      "eps = 1e-3\n"
      "c = 1500 cycles\n");
  CHECK(sc.sys.D == doctest::Approx(200.0));
  CHECK(sc.sys.B == doctest::Approx(2e6));
  CHECK(sc.sys.eta == doctest::Approx(0.4));
  CHECK(sc.sys.sigma_conv == doctest::Approx(1e-4));
  CHECK(sc.sys.t_guard == doctest::Approx(2e-3));
  CHECK(sc.ue1.L == doctest::Approx(900.0));
  CHECK(sc.ue1.P_max == doctest::Approx(0.2));
  CHECK(sc.ue2.eps == doctest::Approx(1e-3));
  CHECK(sc.ue2.c == doctest::Approx(1500.0));
  // Untouched keys keep their defaults.
  CHECK(sc.ue2.L == 1200.0);
  CHECK(sc.sys.delta == 0.5);
}

TEST_CASE("decibel suffixes convert to linear") {
  const Scenario sc = parse_scenario_text(
      "[system]\n"
      "beta0 = -60 dB\n"
      "N0 = -169 dBmHz\n");
  CHECK(sc.sys.beta0 == doctest::Approx(1e-6).epsilon(1e-12));
  CHECK(sc.sys.N0 ==
        doctest::Approx(1.2589254117941713e-20).epsilon(1e-12));
}

TEST_CASE("parse errors carry the offending line") {
  const auto line_of = [](const std::string& text) {
    try {
      parse_scenario_text(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("[nosuch]\n") == 1);
  CHECK(line_of("[system]\nbogus = 1\n") == 2);
  CHECK(line_of("D = 100\n") == 1);              // key before any section
  CHECK(line_of("[system]\n\nD = abc\n") == 3);  // malformed number
  CHECK(line_of("[system]\nD = 1 furlong\n") == 2);  // unknown suffix
  CHECK(line_of("[system\n") == 1);              // unterminated header
  CHECK(line_of("[system]\n= 5\n") == 2);        // empty key
  CHECK_THROWS_AS(parse_scenario("/nonexistent/scenario.ini"), ParseError);
}

TEST_CASE("validation names the broken field") {
  const auto field_of = [](const std::string& text) {
    try {
      parse_scenario_text(text);
    } catch (const ValidationError& e) {
      return e.field;
    }
    return std::string("none");
  };
  CHECK(field_of("[ue1]\neps = 0.7\n") == "ue1.eps");
  CHECK(field_of("[ue2]\neps = 0\n") == "ue2.eps");
  CHECK(field_of("[system]\neta = 1.5\n") == "eta");
  CHECK(field_of("[system]\ndelta = 0\n") == "delta");
  CHECK(field_of("[system]\nD = -5\n") == "D");
  CHECK(field_of("[system]\nB = 0\n") == "B");
  CHECK(field_of("[ue1]\nL = -1\n") == "ue1.L");
  CHECK(field_of("[solver]\nt_guard = 1\n") == "t_guard");
  // Zero load is legal: the user may simply have nothing to offload.
  CHECK_NOTHROW(parse_scenario_text("[ue1]\nL = 0\n"));
}

TEST_CASE("file round trip") {
  const std::string path = "test_scenario_roundtrip.ini";
  {
    std::ofstream out(path);
    out << "[system]\nB = 4e6\n[ue2]\nL = 800\n";
  }
  const Scenario sc = parse_scenario(path);
  CHECK(sc.sys.B == doctest::Approx(4e6));
  CHECK(sc.ue2.L == doctest::Approx(800.0));
  std::remove(path.c_str());
}
