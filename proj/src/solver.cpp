#include "iongate/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "iongate/gates.hpp"
#include "iongate/pulses.hpp"
#include "iongate/rabi.hpp"

namespace iongate {

namespace {

constexpr double kVanishingFrequency = 1e-12;
constexpr double kRecordCheckTol = 1e-8;

double carrier_frequency(const TrapConfig& cfg, int m) {
  return rabi_sum({cfg.eta, 0, m});
}

double sideband_frequency(const TrapConfig& cfg, int m_lower) {
  return rabi_sum({cfg.eta, cfg.k, m_lower});
}

TrapConfig verification_config(double eta, int k) {
  const int guard = std::max(k, 4);
  return TrapConfig::make(eta, k, k + guard + 2, guard);
}

}  // namespace

HadamardPulseSolution solve_h_parameters(const TrapConfig& cfg, int m,
                                         int branch_r, int branch_f) {
  cfg.validate();
  if (m < 0) throw std::invalid_argument("Fock index must be non-negative");
  if (branch_r < 0 || branch_f < 0)
    throw std::invalid_argument("branch indices must be non-negative");
  if (m >= cfg.k)
    throw NoSolutionError(
        "the ground state must stay decoupled from the flip pulse; need m < k");

  const double wr = carrier_frequency(cfg, m);
  if (std::abs(wr) < kVanishingFrequency)
    throw NoSolutionError("carrier frequency vanishes at this Lamb-Dicke parameter");
  const double wf = sideband_frequency(cfg, m);
  if (std::abs(wf) < kVanishingFrequency)
    throw NoSolutionError("sideband frequency vanishes at this Lamb-Dicke parameter");

  constexpr double pi = std::numbers::pi;
  HadamardPulseSolution sol;
  // wr * theta_r must land on pi/4 modulo a full turn, with theta_r > 0
  sol.theta_r = wr > 0.0 ? (pi / 4 + 2 * pi * branch_r) / wr
                         : (pi / 4 - 2 * pi * (branch_r + 1)) / wr;
  sol.theta_f = (pi + 2 * pi * branch_f) / std::abs(wf);
  sol.phi_r = pi / 2;
  return sol;
}

std::vector<PulseSpec> h_pulse_sequence(const HadamardPulseSolution& sol,
                                        const TrapConfig& cfg, HadamardOrder order) {
  cfg.validate();
  constexpr double pi = std::numbers::pi;
  if (order == HadamardOrder::carrier_then_sideband)
    return {make_carrier(sol.phi_r, sol.theta_r),
            make_sideband(cfg.k, 0.0, sol.theta_f)};
  return {make_sideband(cfg.k, 0.0, sol.theta_f),
          make_carrier(sol.phi_r + pi, sol.theta_r)};
}

double solve_cz_eta(int k, int p, int q) {
  if (k < 1) throw std::invalid_argument("sideband order must be at least 1");
  if (p < 1 || q < 1) throw std::invalid_argument("winding numbers must be at least 1");
  const double eta2 =
      (k + 1) - std::sqrt(static_cast<double>(k + 1)) * (q - 0.5) / p;
  if (eta2 <= 0.0 || eta2 >= 1.0)
    throw NoSolutionError("no Lamb-Dicke parameter in (0, 1) for these winding numbers");
  return std::sqrt(eta2);
}

double cz_duration(const TrapConfig& cfg, int p) {
  cfg.validate();
  if (p < 1) throw std::invalid_argument("winding numbers must be at least 1");
  const double w = sideband_frequency(cfg, 0);
  if (std::abs(w) < kVanishingFrequency)
    throw NoSolutionError("sideband frequency vanishes at this Lamb-Dicke parameter");
  return 2.0 * std::numbers::pi * p / w;
}

std::optional<std::pair<int, int>> match_commensurate(double eta, int k, int max_p,
                                                      double ratio_tol) {
  if (k < 1) throw std::invalid_argument("sideband order must be at least 1");
  if (eta <= 0.0 || eta >= 1.0)
    throw std::invalid_argument("Lamb-Dicke parameter must lie strictly in (0, 1)");
  const double root = std::sqrt(static_cast<double>(k + 1));
  const double ratio = ((k + 1) - eta * eta) / root;
  for (int p = 1; p <= max_p; ++p) {
    const int q = static_cast<int>(std::llround(ratio * p + 0.5));
    if (q < 1) continue;
    const double eta2 = (k + 1) - root * (q - 0.5) / p;
    if (eta2 <= 0.0 || eta2 >= 1.0) continue;
    if (std::abs(ratio - (q - 0.5) / p) <= ratio_tol) return std::make_pair(p, q);
  }
  return std::nullopt;
}

double carrier_phase_value(CarrierPhase phase) {
  return phase == CarrierPhase::pi_half ? std::numbers::pi / 2
                                        : 3 * std::numbers::pi / 2;
}

CnDurations solve_cn_durations(const TrapConfig& cfg, CarrierPhase branch,
                               int p_prime, int q_prime) {
  cfg.validate();
  if (p_prime < 0 || q_prime < 0)
    throw std::invalid_argument("winding numbers must be non-negative");
  const double w00 = carrier_frequency(cfg, 0);
  const double w11 = carrier_frequency(cfg, 1);
  if (std::abs(w00) < kVanishingFrequency || std::abs(w11) < kVanishingFrequency)
    throw NoSolutionError("carrier frequency vanishes at this Lamb-Dicke parameter");

  constexpr double pi = std::numbers::pi;
  const double a = (p_prime + 1) / w00;
  const double b = (q_prime + 0.25) / w11;
  CnDurations d;
  if (branch == CarrierPhase::pi_half) {
    d.theta1 = pi * (a + b);
    d.theta3 = pi * (a - b);
  } else {
    d.theta1 = pi * (a - b);
    d.theta3 = pi * (a + b);
  }
  if (d.theta1 <= 0.0 || d.theta3 <= 0.0)
    throw NoSolutionError("carrier durations must be positive; raise the winding numbers");
  return d;
}

std::vector<PulseSpec> cn_pulse_sequence(const SolutionRecord& record) {
  constexpr double pi = std::numbers::pi;
  return {make_carrier(record.phi1, record.theta1_over_pi * pi),
          make_sideband(record.k, 0.0, record.theta2_over_pi * pi),
          make_carrier(record.phi3, record.theta3_over_pi * pi)};
}

std::vector<SolutionRecord> enumerate_solutions(int k, int max_p, int max_pq_prime) {
  if (k < 1) throw std::invalid_argument("sideband order must be at least 1");
  if (max_p < 1) throw std::invalid_argument("winding bound must be at least 1");
  if (max_pq_prime < 0)
    throw std::invalid_argument("carrier winding bound must be non-negative");

  constexpr double pi = std::numbers::pi;
  const double root = std::sqrt(static_cast<double>(k + 1));
  const Eigen::Matrix4cd target = ideal_cn();

  std::vector<SolutionRecord> out;
  for (int p = 1; p <= max_p; ++p) {
    const int q_lo = static_cast<int>(std::floor(p * k / root + 0.5)) + 1;
    const int q_hi = static_cast<int>(std::ceil(p * root + 0.5)) - 1;
    for (int q = std::max(1, q_lo); q <= q_hi; ++q) {
      const double eta2 = (k + 1) - root * (q - 0.5) / p;
      if (eta2 <= 0.0 || eta2 >= 1.0) continue;
      const double eta = std::sqrt(eta2);
      const TrapConfig cfg = verification_config(eta, k);
      const double theta2 = cz_duration(cfg, p);

      for (CarrierPhase branch : {CarrierPhase::pi_half, CarrierPhase::three_pi_half}) {
        for (int pp = 0; pp <= max_pq_prime; ++pp) {
          for (int qp = 0; qp <= max_pq_prime; ++qp) {
            CnDurations d;
            try {
              d = solve_cn_durations(cfg, branch, pp, qp);
            } catch (const NoSolutionError&) {
              continue;
            }
            SolutionRecord rec;
            rec.k = k;
            rec.eta = eta;
            rec.p = p;
            rec.q = q;
            rec.p_prime = pp;
            rec.q_prime = qp;
            rec.theta2_over_pi = theta2 / pi;
            rec.theta1_over_pi = d.theta1 / pi;
            rec.theta3_over_pi = d.theta3 / pi;
            rec.phi1 = carrier_phase_value(branch);
            rec.phi3 = carrier_phase_value(branch);

            const UnitaryMatrix u = compose(cn_pulse_sequence(rec), cfg);
            const RestrictionReport rep = restrict_to_gamma(u, cfg);
            rec.cn_error = gate_distance(rep.block, target);
            rec.leakage = rep.leakage;
            if (rec.cn_error > kRecordCheckTol)
              throw std::logic_error("composed pulses failed to reproduce the gate");
            out.push_back(rec);
          }
        }
      }
    }
  }

  std::sort(out.begin(), out.end(),
            [](const SolutionRecord& x, const SolutionRecord& y) {
              return std::make_tuple(-x.eta, x.theta2_over_pi, x.theta1_over_pi,
                                     x.p, x.q, x.p_prime, x.q_prime) <
                     std::make_tuple(-y.eta, y.theta2_over_pi, y.theta1_over_pi,
                                     y.p, y.q, y.p_prime, y.q_prime);
            });
  return out;
}

}  // namespace iongate
