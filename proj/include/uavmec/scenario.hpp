#pragma once

#include <string>

#include "uavmec/types.hpp"

namespace uavmec {

struct Scenario {
  SystemConfig sys;
  UeProfile ue1;
  UeProfile ue2;
};

// The stock parameter set the experiments run on.
Scenario default_scenario();

// INI-style scenario text: sections [system], [ue1], [ue2], [solver]; keys
// named exactly as the SystemConfig/UeProfile fields ([solver] holds
// sigma_conv and t_guard). Values are SI by default; suffix "dBmHz" converts
// from dBm/Hz, "dB" from dB; bare SI markers (W, Hz, s, m, b, bits, cycles)
// are accepted and ignored. Unknown sections, keys, or suffixes raise
// ParseError with the line number; missing keys keep the defaults; invariant
// violations raise ValidationError naming the field. An empty file yields
// default_scenario().
Scenario parse_scenario_text(const std::string& text);
Scenario parse_scenario(const std::string& path);

// Invariant checks on a fully assembled scenario (also run by the parsers).
void validate(const Scenario& sc);

}  // namespace uavmec
