#include "iongate/pulses.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "iongate/rabi.hpp"

namespace iongate {

namespace {

Complex i_pow(int n) {
  static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((n % 4) + 4) % 4];
}

void check_pulse_args(const TrapConfig& cfg, int k, double theta) {
  cfg.validate();
  if (k < 0) throw std::invalid_argument("pulse order must be non-negative");
  if (cfg.truncation < k + cfg.guard)
    throw std::invalid_argument("truncation too small for this pulse order");
  if (!(theta >= 0.0)) throw std::invalid_argument("pulse duration must be non-negative");
}

// one closed form covers both pulse kinds: for order k the pairs are
// (|m+k,g>, |m,e>) and the amplitude flowing g -> e carries i^{k-1} e^{-i phi},
// the reverse flow -(-i)^{k-1} e^{i phi}; k = 0 is the carrier
UnitaryMatrix order_k_unitary(const TrapConfig& cfg, int k, double phi, double theta) {
  check_pulse_args(cfg, k, theta);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(cfg.dim(), cfg.dim());
  const Complex from_g = i_pow(k - 1) * std::polar(1.0, -phi);
  for (int m = 0; m + k <= cfg.truncation; ++m) {
    const double w = rabi_sum({cfg.eta, k, m});
    const double c = std::cos(w * theta);
    const double s = std::sin(w * theta);
    const int g_slot = state_index(m + k, Level::g);
    const int e_slot = state_index(m, Level::e);
    u(g_slot, g_slot) = c;
    u(e_slot, e_slot) = c;
    u(e_slot, g_slot) = from_g * s;
    u(g_slot, e_slot) = -std::conj(from_g) * s;
  }
  return UnitaryMatrix(std::move(u));
}

}  // namespace

PulseSpec make_carrier(double phi, double theta) {
  return {PulseKind::carrier, 0, phi, theta};
}

PulseSpec make_sideband(int k, double phi, double theta) {
  return {PulseKind::red_sideband, k, phi, theta};
}

UnitaryMatrix carrier_unitary(const TrapConfig& cfg, double phi, double theta) {
  return order_k_unitary(cfg, 0, phi, theta);
}

UnitaryMatrix sideband_unitary(const TrapConfig& cfg, double phi, double theta) {
  return order_k_unitary(cfg, cfg.k, phi, theta);
}

UnitaryMatrix pulse_unitary(const TrapConfig& cfg, const PulseSpec& p) {
  if (p.kind == PulseKind::carrier) {
    if (p.k != 0) throw std::invalid_argument("carrier pulses have k = 0");
    return order_k_unitary(cfg, 0, p.phi, p.theta);
  }
  if (p.k < 1) throw std::invalid_argument("sideband pulses need k >= 1");
  return order_k_unitary(cfg, p.k, p.phi, p.theta);
}

UnitaryMatrix hamiltonian_oracle_unitary(const TrapConfig& cfg, const PulseSpec& p) {
  const int k = p.kind == PulseKind::carrier ? 0 : p.k;
  check_pulse_args(cfg, k, p.theta);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(cfg.dim(), cfg.dim());
  for (int m = k; m <= cfg.truncation; ++m) {
    const Complex entry =
        i_pow(k) * std::polar(1.0, -p.phi) * rabi_sum({cfg.eta, k, m - k});
    h(state_index(m - k, Level::e), state_index(m, Level::g)) = entry;
    h(state_index(m, Level::g), state_index(m - k, Level::e)) = std::conj(entry);
  }
  return UnitaryMatrix((Complex(0.0, -1.0) * p.theta * h).exp());
}

UnitaryMatrix compose(std::span<const PulseSpec> pulses, const TrapConfig& cfg) {
  cfg.validate();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(cfg.dim(), cfg.dim());
  for (const PulseSpec& p : pulses) u = pulse_unitary(cfg, p).matrix() * u;
  return UnitaryMatrix(std::move(u));
}

}  // namespace iongate
