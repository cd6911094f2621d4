#pragma once

#include <stdexcept>
#include <string>

namespace uavmec {

inline constexpr const char* kVersion = "uavmec 1.0.0";

enum class Scheme { noma, fdma, tdma };
enum class Regime { infinite, finite };
enum class EvalMode { strict, success_only };

const char* to_string(Scheme s);
const char* to_string(Regime r);
const char* to_string(EvalMode m);
bool parse_scheme(const std::string& text, Scheme& out);
bool parse_regime(const std::string& text, Regime& out);
bool parse_eval_mode(const std::string& text, EvalMode& out);

// Global physical and resource constants. All values are SI (meters, watts,
// Hz, seconds, bits); dB/dBm inputs are converted once at scenario ingestion.
struct SystemConfig {
  double D = 100.0;        // UE separation, UE 1 at x=0 and UE 2 at x=D
  double H = 50.0;         // UAV altitude
  double beta0 = 1e-6;     // channel power gain at 1 m (-60 dB)
  double N0 = 1.2589254117941713e-20;  // noise PSD, -169 dBm/Hz
  double B = 3e6;          // total bandwidth
  double T_max = 1e-3;     // task deadline
  double f_U_max = 9e9;    // UAV CPU cap
  double kappa_U = 1e-28;  // UAV effective capacitance coefficient
  double eta = 0.5;        // FDMA bandwidth split (UE 1 share)
  double delta = 0.5;      // TDMA time split (UE 1 share)
  double sigma_conv = 1e-3;  // relative convergence accuracy of the outer loop
  double t_guard = 1e-3;   // keeps t <= (1-t_guard)*T_max when offloading,
                           // since remote energy diverges as t -> T_max
  double V = 1.0;          // channel dispersion, ~1 in the short-packet model
};

// Per-UE task and hardware parameters.
struct UeProfile {
  double L = 1200.0;   // task size, bits
  double c = 1000.0;   // cycles per bit
  double kappa = 1e-28;  // effective capacitance coefficient
  double f_max = 1e9;  // local CPU cap
  double P_max = 0.1;  // transmit power cap
  double eps = 1e-5;   // decoding error probability (finite regime only)
};

// The optimization variables of one scheme/regime problem. The blocklength
// N = B*t is derived on demand, never stored.
struct Decision {
  double rho1 = 0.0;  // offloaded portion of UE 1's task
  double rho2 = 0.0;
  double t = 0.0;     // offloading window, seconds
  double d = 0.0;     // UAV horizontal coordinate, meters from UE 1
};

// Linear channel power gains and their per-watt normalized forms h/(B*N0).
struct ChannelState {
  double h1 = 0.0;
  double h2 = 0.0;
  double hbar1 = 0.0;
  double hbar2 = 0.0;
};

// Error taxonomy. CLI exit codes: parse/validation 2, infeasible 3,
// internal 4.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Remote-computing denominator would be nonpositive with a positive offload.
struct InfeasibleTimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// NOMA finite-blocklength SIC margin 1 - U1*U2 at or below the guard band.
struct SicInfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A subproblem or full problem has an empty feasible set; carries the id of
// the constraint found binding.
struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(std::string constraint, const std::string& msg)
      : std::runtime_error(msg), constraint_id(std::move(constraint)) {}
  std::string constraint_id;
};

struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& msg)
      : std::runtime_error(msg), line(line_number) {}
  int line;
};

struct ValidationError : std::runtime_error {
  ValidationError(std::string field_name, const std::string& msg)
      : std::runtime_error(msg), field(std::move(field_name)) {}
  std::string field;
};

}  // namespace uavmec
