#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "iongate/gates.hpp"
#include "iongate/pulses.hpp"
#include "iongate/rabi.hpp"

using namespace iongate;

namespace {
constexpr double pi = std::numbers::pi;

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}
}  // namespace

TEST_CASE("zero-duration pulses are the identity") {
  const TrapConfig cfg = TrapConfig::make(0.5, 2, 10, 4);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(cfg.dim(), cfg.dim());
  CHECK(max_abs_diff(carrier_unitary(cfg, 1.3, 0.0).matrix(), id) == 0.0);
  CHECK(max_abs_diff(sideband_unitary(cfg, 0.2, 0.0).matrix(), id) == 0.0);
}

TEST_CASE("carrier rotates each fock block at its own frequency") {
  const TrapConfig cfg = TrapConfig::make(0.5, 0, 12, 4);
  const double phi = 0.7;
  const double theta = 2.3;
  const Eigen::MatrixXcd u = carrier_unitary(cfg, phi, theta).matrix();
  for (int m = 0; m <= 3; ++m) {
    const double w = rabi_sum({cfg.eta, 0, m});
    const int g = state_index(m, Level::g);
    const int e = state_index(m, Level::e);
    CHECK(std::abs(u(g, g) - std::cos(w * theta)) < 1e-15);
    CHECK(std::abs(u(e, e) - std::cos(w * theta)) < 1e-15);
    // g -> e amplitude carries -i e^{-i phi}
    const Complex expected = Complex(0.0, -1.0) * std::polar(1.0, -phi) *
                             std::sin(w * theta);
    CHECK(std::abs(u(e, g) - expected) < 1e-15);
    CHECK(std::abs(u(g, e) - (-std::conj(expected))) < 1e-15);
    // no fock index is changed
    if (m >= 1) CHECK(std::abs(u(g, state_index(m - 1, Level::e))) == 0.0);
  }
}

TEST_CASE("sideband couples |m+k,g> with |m,e> and spares low |m,g>") {
  const TrapConfig cfg = TrapConfig::make(0.8, 3, 14, 4);
  const Eigen::MatrixXcd u = sideband_unitary(cfg, 0.4, 1.9).matrix();
  // |0,g>, |1,g>, |2,g> have no partner k quanta below
  for (int m = 0; m < 3; ++m) {
    const int g = state_index(m, Level::g);
    CHECK(u(g, g) == Complex(1.0, 0.0));
    CHECK(u.col(g).cwiseAbs().sum() == doctest::Approx(1.0));
  }
  const double w = rabi_sum({cfg.eta, 3, 1});
  const int gs = state_index(4, Level::g);
  const int es = state_index(1, Level::e);
  CHECK(std::abs(u(gs, gs) - std::cos(w * 1.9)) < 1e-15);
  CHECK(std::abs(u(es, es) - std::cos(w * 1.9)) < 1e-15);
  CHECK(std::abs(std::abs(u(es, gs)) - std::abs(std::sin(w * 1.9))) < 1e-15);
  // the flow phase is i^{k-1} e^{-i phi}; i^2 = -1 for k = 3
  const Complex from_g = -std::polar(1.0, -0.4);
  CHECK(std::abs(u(es, gs) - from_g * std::sin(w * 1.9)) < 1e-15);
}

TEST_CASE("analytic pulse unitaries match the hamiltonian exponential") {
  const std::array<std::pair<double, PulseSpec>, 4> cases = {{
      {0.5, make_carrier(0.3, 2.1)},
      {0.9, make_carrier(5.9, 17.0)},
      {0.5, make_sideband(1, 1.2, 5.0)},
      {0.8, make_sideband(3, 4.0, 7.0)},
  }};
  for (const auto& [eta, spec] : cases) {
    const TrapConfig cfg = TrapConfig::make(eta, spec.k);
    const UnitaryMatrix direct = pulse_unitary(cfg, spec);
    const UnitaryMatrix oracle = hamiltonian_oracle_unitary(cfg, spec);
    CHECK(max_abs_diff(direct.matrix(), oracle.matrix()) < 1e-10);
  }
}

TEST_CASE("advancing the phase by pi inverts a pulse") {
  const TrapConfig cfg = TrapConfig::make(0.7, 2, 12, 4);
  for (double phi : {0.0, 0.9, 4.4}) {
    const Eigen::MatrixXcd u = sideband_unitary(cfg, phi, 3.3).matrix();
    const Eigen::MatrixXcd v = sideband_unitary(cfg, phi + pi, 3.3).matrix();
    CHECK(max_abs_diff(v * u, Eigen::MatrixXcd::Identity(cfg.dim(), cfg.dim())) <
          1e-14);
  }
}

TEST_CASE("durations add within a fixed-phase pulse family") {
  const TrapConfig cfg = TrapConfig::make(0.6, 1, 10, 4);
  const Eigen::MatrixXcd a = sideband_unitary(cfg, 0.8, 1.1).matrix();
  const Eigen::MatrixXcd b = sideband_unitary(cfg, 0.8, 2.6).matrix();
  const Eigen::MatrixXcd c = sideband_unitary(cfg, 0.8, 3.7).matrix();
  CHECK(max_abs_diff(b * a, c) < 1e-14);
}

TEST_CASE("compose multiplies in application order") {
  const TrapConfig cfg = TrapConfig::make(0.6, 1, 10, 4);
  const std::vector<PulseSpec> seq = {make_carrier(0.2, 1.4),
                                      make_sideband(1, 1.0, 2.2)};
  const Eigen::MatrixXcd expected =
      pulse_unitary(cfg, seq[1]).matrix() * pulse_unitary(cfg, seq[0]).matrix();
  CHECK(max_abs_diff(compose(seq, cfg).matrix(), expected) == 0.0);

  const std::vector<PulseSpec> cancel = {make_carrier(0.2, 1.4),
                                         make_carrier(0.2 + pi, 1.4)};
  CHECK(max_abs_diff(compose(cancel, cfg).matrix(),
                     Eigen::MatrixXcd::Identity(cfg.dim(), cfg.dim())) < 1e-14);
}

TEST_CASE("pulse arguments are validated") {
  const TrapConfig cfg = TrapConfig::make(0.5, 1);
  CHECK_THROWS_AS(pulse_unitary(cfg, {PulseKind::carrier, 1, 0.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(pulse_unitary(cfg, {PulseKind::red_sideband, 0, 0.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(pulse_unitary(cfg, make_carrier(0.0, -1.0)), std::invalid_argument);
  // order too high for the configured truncation + guard
  const TrapConfig tight = TrapConfig::make(0.5, 1, 5, 4);
  CHECK_THROWS_AS(pulse_unitary(tight, make_sideband(2, 0.0, 1.0)),
                  std::invalid_argument);
}

TEST_CASE("carrier equals the k=0 specialization of the sideband builder") {
  const TrapConfig cfg = TrapConfig::make(0.45, 0, 10, 4);
  CHECK(max_abs_diff(carrier_unitary(cfg, 0.9, 2.7).matrix(),
                     sideband_unitary(cfg, 0.9, 2.7).matrix()) == 0.0);
}
