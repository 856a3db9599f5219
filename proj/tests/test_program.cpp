#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "iongate/program.hpp"
#include "iongate/rabi.hpp"

using namespace iongate;

namespace {
constexpr double pi = std::numbers::pi;

const std::string kFlipProgram = R"({
  "eta": 0.5,
  "pulses": [
    {"type": "sideband", "k": 1, "phase_pi": 0.0, "theta_pi": 2.2663}
  ],
  "initial_state": [[0, "e", 1.0, 0.0]]
})";
}  // namespace

TEST_CASE("parsing fills defaults and reads all fields") {
  const PulseProgram prog = parse_pulse_program(kFlipProgram);
  CHECK(prog.eta == 0.5);
  CHECK(prog.truncation == 32);
  CHECK(prog.guard == 4);
  REQUIRE(prog.pulses.size() == 1);
  CHECK(prog.pulses[0].kind == PulseKind::red_sideband);
  CHECK(prog.pulses[0].k == 1);
  CHECK(prog.pulses[0].theta == 2.2663 * pi);
  REQUIRE(prog.initial_state.has_value());
  CHECK(prog.initial_state->size() == 1);
  CHECK_FALSE(prog.target_state.has_value());
  CHECK(prog.max_sideband_order() == 1);
  CHECK(prog.config().dim() == 66);

  const PulseProgram high = parse_pulse_program(
      R"({"eta": 0.4, "pulses": [{"type": "sideband", "k": 6, "phase_pi": 0, "theta_pi": 1}]})");
  CHECK(high.guard == 6);  // guard follows the highest sideband order
  CHECK(high.config().k == 6);
}

TEST_CASE("canonical serialization is byte-stable under reparsing") {
  for (const std::string& raw :
       {kFlipProgram,
        std::string(R"({"eta": 0.969195, "truncation": 12, "guard": 5,
          "pulses": [{"type": "carrier", "phase_pi": 0.5, "theta_pi": 29.178486171996656},
                     {"type": "sideband", "k": 2, "phase_pi": 1.25, "theta_pi": 13.202423829977523}],
          "target_state": [[1, "g", 0.70710678, 0.0], [1, "e", 0.0, -0.70710678]]})")}) {
    const std::string s1 = serialize_pulse_program(parse_pulse_program(raw));
    const std::string s2 = serialize_pulse_program(parse_pulse_program(s1));
    CHECK(s1 == s2);
  }
}

TEST_CASE("unknown or malformed fields are rejected") {
  CHECK_THROWS_AS(parse_pulse_program("not json"), ProgramParseError);
  CHECK_THROWS_AS(parse_pulse_program("[1, 2]"), ProgramParseError);
  CHECK_THROWS_AS(parse_pulse_program(R"({"pulses": []})"), ProgramParseError);
  CHECK_THROWS_AS(parse_pulse_program(R"({"eta": "x", "pulses": []})"),
                  ProgramParseError);
  CHECK_THROWS_AS(parse_pulse_program(R"({"eta": 0.5})"), ProgramParseError);
  CHECK_THROWS_AS(parse_pulse_program(R"({"eta": 0.5, "pulses": [], "bogus": 1})"),
                  ProgramParseError);
  CHECK_THROWS_AS(parse_pulse_program(R"({"eta": 0.5, "pulses": 3})"),
                  ProgramParseError);
  CHECK_THROWS_AS(
      parse_pulse_program(R"({"eta": 0.5, "truncation": 3.5, "pulses": []})"),
      ProgramParseError);
}

TEST_CASE("pulse entries are validated") {
  auto with_pulse = [](const std::string& pulse) {
    return parse_pulse_program(R"({"eta": 0.5, "pulses": [)" + pulse + "]}");
  };
  CHECK_NOTHROW(with_pulse(R"({"type": "carrier", "phase_pi": 0, "theta_pi": 1})"));
  CHECK_NOTHROW(
      with_pulse(R"({"type": "carrier", "k": 0, "phase_pi": 0, "theta_pi": 1})"));
  // carrier with nonzero k
  CHECK_THROWS_AS(
      with_pulse(R"({"type": "carrier", "k": 1, "phase_pi": 0, "theta_pi": 1})"),
      ProgramParseError);
  // sideband without k, and with k = 0
  CHECK_THROWS_AS(with_pulse(R"({"type": "sideband", "phase_pi": 0, "theta_pi": 1})"),
                  ProgramParseError);
  CHECK_THROWS_AS(
      with_pulse(R"({"type": "sideband", "k": 0, "phase_pi": 0, "theta_pi": 1})"),
      ProgramParseError);
  CHECK_THROWS_AS(
      with_pulse(R"({"type": "blue", "phase_pi": 0, "theta_pi": 1})"),
      ProgramParseError);
  CHECK_THROWS_AS(
      with_pulse(R"({"type": "carrier", "phase_pi": 0, "theta_pi": -0.5})"),
      ProgramParseError);
  CHECK_THROWS_AS(with_pulse(R"({"type": "carrier", "phase_pi": 0})"),
                  ProgramParseError);
  CHECK_THROWS_AS(
      with_pulse(R"({"type": "carrier", "phase_pi": 0, "theta_pi": 1, "x": 2})"),
      ProgramParseError);
}

TEST_CASE("state entries are validated") {
  auto with_state = [](const std::string& entries) {
    return parse_pulse_program(
        R"({"eta": 0.5, "truncation": 8, "guard": 4, "pulses": [], "initial_state": )" +
        entries + "}");
  };
  CHECK_NOTHROW(with_state(R"([[0, "g", 1.0, 0.0]])"));
  CHECK_THROWS_AS(with_state(R"(3)"), ProgramParseError);
  CHECK_THROWS_AS(with_state(R"([[0, "g", 1.0]])"), ProgramParseError);
  CHECK_THROWS_AS(with_state(R"([[0, "x", 1.0, 0.0]])"), ProgramParseError);
  CHECK_THROWS_AS(with_state(R"([[-1, "g", 1.0, 0.0]])"), ProgramParseError);
  CHECK_THROWS_AS(with_state(R"([[9, "g", 1.0, 0.0]])"), ProgramParseError);
  CHECK_THROWS_AS(with_state(R"([[0, "g", 1.0, 0.0], [0, "g", 0.0, 0.0]])"),
                  ProgramParseError);
  CHECK_THROWS_AS(with_state(R"([[0.5, "g", 1.0, 0.0]])"), ProgramParseError);
}

TEST_CASE("state construction normalizes and bounds indices") {
  const TrapConfig cfg = TrapConfig::make(0.5, 1, 8, 4);
  const JointState psi = state_from_entries(
      {{0, Level::g, 0.6, 0.0}, {1, Level::e, 0.0, 0.8}}, cfg);
  CHECK(std::abs(psi.amplitude(0, Level::g).real() - 0.6) < 1e-12);
  CHECK(std::abs(psi.amplitude(1, Level::e).imag() - 0.8) < 1e-12);
  CHECK_THROWS_AS(state_from_entries({{9, Level::g, 1.0, 0.0}}, cfg),
                  std::out_of_range);
  // norm far from one is rejected
  CHECK_THROWS_AS(state_from_entries({{0, Level::g, 0.5, 0.0}}, cfg),
                  std::invalid_argument);
}

TEST_CASE("a half-period sideband flips the sign of |0,e>") {
  // theta chosen so Omega_{0,1} * theta = pi: cos = -1 and no transfer
  const double w = rabi_sum({0.5, 1, 0});
  PulseProgram prog = parse_pulse_program(kFlipProgram);
  prog.pulses[0].theta = pi / w;
  prog.target_state = {{{0, Level::e, -1.0, 0.0}}};
  const SimulationResult res = run_program(prog);
  CHECK(std::abs(res.final_state.amplitude(0, Level::e) - Complex(-1.0, 0.0)) <
        1e-12);
  CHECK(res.leakage < 1e-20);
  REQUIRE(res.fidelity.has_value());
  CHECK(*res.fidelity == doctest::Approx(1.0));
  REQUIRE(res.steps.size() == 1);
  CHECK(std::abs(res.steps[0].norm - 1.0) < 1e-12);
}

TEST_CASE("low fock g states ignore higher-order sidebands") {
  const PulseProgram prog = parse_pulse_program(R"({
    "eta": 0.7,
    "pulses": [{"type": "sideband", "k": 3, "phase_pi": 0.3, "theta_pi": 7.7}],
    "initial_state": [[2, "g", 1.0, 0.0]],
    "target_state": [[2, "g", 1.0, 0.0]]
  })");
  const SimulationResult res = run_program(prog);
  CHECK(*res.fidelity == doctest::Approx(1.0));
}

TEST_CASE("programs that pump the guard band are stopped") {
  const PulseProgram prog = parse_pulse_program(R"({
    "eta": 0.95,
    "truncation": 6,
    "guard": 4,
    "pulses": [{"type": "sideband", "k": 1, "phase_pi": 0.0, "theta_pi": 40.0}],
    "initial_state": [[2, "e", 1.0, 0.0]]
  })");
  CHECK_THROWS_AS(run_program(prog), GuardBandError);
  CHECK_NOTHROW(run_program(prog, 1.0));
}

TEST_CASE("default initial state is the motional and electronic ground state") {
  const PulseProgram prog = parse_pulse_program(
      R"({"eta": 0.5, "pulses": [], "target_state": [[0, "g", 1.0, 0.0]]})");
  const SimulationResult res = run_program(prog);
  CHECK(*res.fidelity == doctest::Approx(1.0));
}
