// Closed-form pulse parameters for exact Hadamard, controlled-Z and
// controlled-NOT gates, and enumeration of the commensurate operating points
// (eta, durations) at which a single sideband pulse realizes an exact CZ.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "iongate/hilbert.hpp"
#include "iongate/pulses.hpp"

namespace iongate {

// thrown when a requested gate has no solution in the allowed domain
struct NoSolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- Hadamard

struct HadamardPulseSolution {
  double theta_r;  // resonant pulse duration, Omega_{m,m} theta_r = pi/4 (mod 2 pi)
  double theta_f;  // sideband duration, cos(Omega_{m,m+k} theta_f) = -1
  double phi_r;    // carrier phase for the carrier-first order (pi/2)
};

enum class HadamardOrder { carrier_then_sideband, sideband_then_carrier };

// exact Hadamard on the (|m,g>, |m,e>) block, m < k; the branch integers pick
// higher members of the 2 pi duration families
HadamardPulseSolution solve_h_parameters(const TrapConfig& cfg, int m,
                                         int branch_r = 0, int branch_f = 0);

std::vector<PulseSpec> h_pulse_sequence(const HadamardPulseSolution& s,
                                        const TrapConfig& cfg, HadamardOrder order);

// ---------------------------------------------------------------- CZ

// Lamb-Dicke parameter at which Omega_{1,k+1}/Omega_{0,k} = (q - 1/2)/p, i.e.
// eta^2 = (k+1) - sqrt(k+1) (q - 1/2)/p; throws NoSolutionError outside (0, 1)
double solve_cz_eta(int k, int p, int q);

// theta2 = 2 p pi / Omega_{0,k}; a single sideband pulse of this duration is an
// exact CZ on Gamma (any laser phase)
double cz_duration(const TrapConfig& cfg, int p);

// first (smallest p) commensurate pair with |ratio - (q-1/2)/p| <= ratio_tol
std::optional<std::pair<int, int>> match_commensurate(double eta, int k, int max_p,
                                                      double ratio_tol = 1e-4);

// ---------------------------------------------------------------- CN

enum class CarrierPhase { pi_half, three_pi_half };
double carrier_phase_value(CarrierPhase branch);

struct CnDurations {
  double theta1;
  double theta3;
};

// carrier durations around the CZ pulse: Omega_{0,0}(t1 + t3) = 2 pi (p'+1) and
// Omega_{1,1}|t3 - t1| = 2 pi (q' + 1/4), with the sign picked by the carrier
// phase branch; throws NoSolutionError when a duration would be non-positive
CnDurations solve_cn_durations(const TrapConfig& cfg, CarrierPhase branch,
                               int p_prime, int q_prime);

// ---------------------------------------------------------------- enumeration

struct SolutionRecord {
  int k;
  double eta;
  int p, q;                // CZ commensurability integers
  int p_prime, q_prime;    // carrier duration integers
  double theta2_over_pi;
  double theta1_over_pi;
  double theta3_over_pi;
  double phi1, phi3;       // radians (pi/2 for enumerated records)
  double cn_error;         // entrywise distance of the composed gate to CN
  double leakage;          // out-of-Gamma leakage of the composed gate
};

std::vector<PulseSpec> cn_pulse_sequence(const SolutionRecord& r);

// every (p, q) with p <= max_p and eta in (0, 1), joined with every
// positive-duration (p', q') up to max_pq_prime; each record re-verified
// end-to-end before being returned. Sorted by (eta desc, theta2 asc, theta1 asc).
std::vector<SolutionRecord> enumerate_solutions(int k, int max_p, int max_pq_prime);

}  // namespace iongate
