// Exact unitaries of resonant (carrier) and k-th red-sideband laser pulses on
// the truncated joint space, in the rotating frame with the base Rabi
// frequency normalized to 1.
//
// A sideband pulse couples the pairs (|m+k,g>, |m,e>) at frequency
// Omega_{m,m+k}; levels |m,g> with m < k are left untouched. The carrier is
// the k = 0 case and rotates each Fock block at its own frequency Omega_{m,m}.
#pragma once

#include <span>
#include <vector>

#include "iongate/hilbert.hpp"

namespace iongate {

enum class PulseKind { carrier, red_sideband };

struct PulseSpec {
  PulseKind kind;
  int k;        // phonons exchanged; 0 for carrier
  double phi;   // laser phase, radians
  double theta; // dimensionless duration theta = Omega t, >= 0
};

PulseSpec make_carrier(double phi, double theta);
PulseSpec make_sideband(int k, double phi, double theta);

// blockwise closed-form constructions
UnitaryMatrix carrier_unitary(const TrapConfig& cfg, double phi, double theta);
UnitaryMatrix sideband_unitary(const TrapConfig& cfg, double phi, double theta); // order cfg.k
UnitaryMatrix pulse_unitary(const TrapConfig& cfg, const PulseSpec& p);          // order p.k

// independent check: build the interaction Hamiltonian entrywise,
//   <m-k,e|H|m,g> = i^k e^{-i phi} Omega_{m-k,m},
// and exponentiate it with scaling-and-squaring. Used as the oracle for the
// blockwise constructions above.
UnitaryMatrix hamiltonian_oracle_unitary(const TrapConfig& cfg, const PulseSpec& p);

// product U_n ... U_1 for the pulse list (p_1, ..., p_n); first listed = first applied
UnitaryMatrix compose(std::span<const PulseSpec> pulses, const TrapConfig& cfg);

}  // namespace iongate
