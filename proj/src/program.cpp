#include "iongate/program.hpp"

#include <algorithm>
#include <numbers>
#include <set>
#include <utility>

#include <json.hpp>

namespace iongate {

namespace {

using json = nlohmann::ordered_json;

void require_keys(const json& j, std::initializer_list<const char*> allowed,
                  const char* where) {
  for (const auto& item : j.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* key) {
          return item.key() == key;
        }) == allowed.end())
      throw ProgramParseError(std::string("unknown field \"") + item.key() +
                              "\" in " + where);
  }
}

double require_number(const json& j, const char* key, const char* where) {
  if (!j.contains(key))
    throw ProgramParseError(std::string("missing field \"") + key + "\" in " + where);
  const json& v = j.at(key);
  if (!v.is_number())
    throw ProgramParseError(std::string("field \"") + key + "\" in " + where +
                            " must be a number");
  return v.get<double>();
}

int optional_integer(const json& j, const char* key, int fallback, const char* where) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_integer())
    throw ProgramParseError(std::string("field \"") + key + "\" in " + where +
                            " must be an integer");
  return v.get<int>();
}

PulseSpec parse_pulse(const json& j) {
  if (!j.is_object()) throw ProgramParseError("each pulse must be an object");
  require_keys(j, {"type", "k", "phase_pi", "theta_pi"}, "a pulse");
  if (!j.contains("type") || !j.at("type").is_string())
    throw ProgramParseError("each pulse needs a string field \"type\"");
  const std::string type = j.at("type").get<std::string>();

  const double phase_pi = require_number(j, "phase_pi", "a pulse");
  const double theta_pi = require_number(j, "theta_pi", "a pulse");
  if (!(theta_pi >= 0.0))
    throw ProgramParseError("pulse duration theta_pi must be non-negative");

  constexpr double pi = std::numbers::pi;
  if (type == "carrier") {
    const int k = optional_integer(j, "k", 0, "a carrier pulse");
    if (k != 0) throw ProgramParseError("carrier pulses have k = 0");
    return make_carrier(phase_pi * pi, theta_pi * pi);
  }
  if (type == "sideband") {
    if (!j.contains("k"))
      throw ProgramParseError("sideband pulses need an integer field \"k\"");
    const int k = optional_integer(j, "k", 0, "a sideband pulse");
    if (k < 1) throw ProgramParseError("sideband pulses need k >= 1");
    return make_sideband(k, phase_pi * pi, theta_pi * pi);
  }
  throw ProgramParseError("pulse type must be \"carrier\" or \"sideband\"");
}

std::vector<AmplitudeEntry> parse_state(const json& j, const char* name,
                                        int truncation) {
  if (!j.is_array())
    throw ProgramParseError(std::string("\"") + name +
                            "\" must be an array of [m, level, re, im] entries");
  std::vector<AmplitudeEntry> entries;
  std::set<std::pair<int, int>> seen;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() ||
        !e[1].is_string() || !e[2].is_number() || !e[3].is_number())
      throw ProgramParseError(std::string("entries of \"") + name +
                              "\" must look like [m, \"g\"|\"e\", re, im]");
    AmplitudeEntry entry;
    entry.m = e[0].get<int>();
    const std::string level = e[1].get<std::string>();
    if (level == "g")
      entry.level = Level::g;
    else if (level == "e")
      entry.level = Level::e;
    else
      throw ProgramParseError("state levels must be \"g\" or \"e\"");
    if (entry.m < 0)
      throw ProgramParseError("state Fock indices must be non-negative");
    if (entry.m > truncation)
      throw ProgramParseError("state Fock indices must not exceed the truncation");
    if (!seen.insert({entry.m, static_cast<int>(entry.level)}).second)
      throw ProgramParseError(std::string("duplicate state entry in \"") + name + "\"");
    entry.re = e[2].get<double>();
    entry.im = e[3].get<double>();
    entries.push_back(entry);
  }
  return entries;
}

json state_to_json(const std::vector<AmplitudeEntry>& entries) {
  json out = json::array();
  for (const AmplitudeEntry& e : entries)
    out.push_back(json::array(
        {e.m, e.level == Level::g ? "g" : "e", e.re, e.im}));
  return out;
}

}  // namespace

int PulseProgram::max_sideband_order() const {
  int k = 0;
  for (const PulseSpec& p : pulses) k = std::max(k, p.k);
  return k;
}

TrapConfig PulseProgram::config() const {
  return TrapConfig::make(eta, max_sideband_order(), truncation, guard);
}

PulseProgram parse_pulse_program(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ProgramParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ProgramParseError("a pulse program must be a JSON object");
  require_keys(j, {"eta", "truncation", "guard", "pulses", "initial_state",
                   "target_state"},
               "the program");

  PulseProgram prog;
  prog.eta = require_number(j, "eta", "the program");
  prog.truncation = optional_integer(j, "truncation", 32, "the program");

  if (!j.contains("pulses") || !j.at("pulses").is_array())
    throw ProgramParseError("the program needs an array field \"pulses\"");
  for (const json& p : j.at("pulses")) prog.pulses.push_back(parse_pulse(p));

  prog.guard = optional_integer(j, "guard", std::max(prog.max_sideband_order(), 4),
                                "the program");

  if (j.contains("initial_state"))
    prog.initial_state = parse_state(j.at("initial_state"), "initial_state",
                                     prog.truncation);
  if (j.contains("target_state"))
    prog.target_state = parse_state(j.at("target_state"), "target_state",
                                    prog.truncation);
  return prog;
}

std::string serialize_pulse_program(const PulseProgram& prog) {
  constexpr double pi = std::numbers::pi;
  json j;
  j["eta"] = prog.eta;
  j["truncation"] = prog.truncation;
  j["guard"] = prog.guard;
  j["pulses"] = json::array();
  for (const PulseSpec& p : prog.pulses) {
    json entry;
    entry["type"] = p.kind == PulseKind::carrier ? "carrier" : "sideband";
    entry["k"] = p.k;
    entry["phase_pi"] = p.phi / pi;
    entry["theta_pi"] = p.theta / pi;
    j["pulses"].push_back(std::move(entry));
  }
  if (prog.initial_state) j["initial_state"] = state_to_json(*prog.initial_state);
  if (prog.target_state) j["target_state"] = state_to_json(*prog.target_state);
  return j.dump(2) + "\n";
}

JointState state_from_entries(const std::vector<AmplitudeEntry>& entries,
                              const TrapConfig& cfg) {
  cfg.validate();
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(cfg.dim());
  for (const AmplitudeEntry& e : entries) {
    if (e.m > cfg.truncation)
      throw std::out_of_range("Fock index exceeds truncation");
    amps[state_index(e.m, e.level)] = Complex(e.re, e.im);
  }
  return JointState(cfg, std::move(amps));
}

SimulationResult run_program(const PulseProgram& prog, double leak_tol) {
  const TrapConfig cfg = prog.config();
  JointState psi = prog.initial_state ? state_from_entries(*prog.initial_state, cfg)
                                      : basis_state(0, Level::g, cfg);

  std::vector<StepReport> steps;
  for (const PulseSpec& p : prog.pulses) {
    psi = apply(pulse_unitary(cfg, p), psi, leak_tol);
    steps.push_back({p, psi.amplitudes().norm(), psi.guard_occupation()});
  }

  SimulationResult result{std::move(steps), psi, psi.guard_occupation(),
                          std::nullopt};
  if (prog.target_state)
    result.fidelity = fidelity_overlap(
        state_from_entries(*prog.target_state, cfg), result.final_state);
  return result;
}

}  // namespace iongate
