// Pulse program files: a JSON description of a trap, a pulse list and optional
// initial/target states. Parsing is strict (unknown fields are errors) and the
// canonical serialization round-trips bit-exactly.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iongate/hilbert.hpp"
#include "iongate/pulses.hpp"

namespace iongate {

struct ProgramParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AmplitudeEntry {
  int m;
  Level level;
  double re;
  double im;
};

struct PulseProgram {
  double eta;
  int truncation;  // defaults to 32 when absent
  int guard;       // defaults to max(highest sideband order, 4) when absent
  std::vector<PulseSpec> pulses;  // angles are stored in units of pi in the file
  std::optional<std::vector<AmplitudeEntry>> initial_state;  // default |0,g>
  std::optional<std::vector<AmplitudeEntry>> target_state;

  int max_sideband_order() const;
  TrapConfig config() const;
};

PulseProgram parse_pulse_program(const std::string& json_text);
std::string serialize_pulse_program(const PulseProgram& prog);

JointState state_from_entries(const std::vector<AmplitudeEntry>& entries,
                              const TrapConfig& cfg);

struct StepReport {
  PulseSpec pulse;
  double norm;
  double guard_occupation;
};

struct SimulationResult {
  std::vector<StepReport> steps;
  JointState final_state;
  double leakage;  // guard occupation of the final state
  std::optional<double> fidelity;  // against target_state when given
};

// applies the pulses in order; throws GuardBandError if any step pushes more
// than leak_tol of probability into the guard band
SimulationResult run_program(const PulseProgram& prog,
                             double leak_tol = kDefaultLeakTol);

}  // namespace iongate
