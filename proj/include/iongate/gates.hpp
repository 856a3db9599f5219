// Ideal gate targets on the computational subspace Gamma spanned by
// (|0,g>, |0,e>, |1,g>, |1,e>), restriction of full-space unitaries to that
// subspace, and distance measures.
#pragma once

#include <Eigen/Dense>

#include "iongate/hilbert.hpp"

namespace iongate {

Eigen::Matrix2cd ideal_hadamard();
Eigen::Matrix4cd ideal_cz();
Eigen::Matrix4cd ideal_cn();

// controlled-NOT up to phases on the off-diagonal of the |1,.> block
// (-i e^{i phi} and -i e^{-i phi}); its fourth power is the identity
Eigen::Matrix4cd reduced_cn_phase_gate(double phi);

struct RestrictionReport {
  Eigen::Matrix4cd block;
  double leakage;  // max over the four Gamma columns of the out-of-Gamma norm
};
RestrictionReport restrict_to_gamma(const UnitaryMatrix& u, const TrapConfig& cfg);

struct BlockReport {
  Eigen::Matrix2cd block;
  double leakage;
};
// the (|m,g>, |m,e>) two-level block of a full-space unitary
BlockReport restrict_to_fock_block(const UnitaryMatrix& u, const TrapConfig& cfg, int m);

// entrywise max-abs difference; deliberately sensitive to global phase
double gate_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// 1 - |tr(a^dag b)| / n, blind to a global phase
double phase_insensitive_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// hand-derived trigonometric entry formulas for the Gamma block of
// carrier(phi3, t3) . CZ . carrier(phi1, t1), kept as a cross-check of the
// direct matrix product. The (3,2) entry of this closed form is known to
// disagree with the direct product for generic phases (it coincides on the
// phi1 = phi3 = pi/2 family); the direct product is authoritative.
Eigen::Matrix4cd cn_entry_closed_form(double omega00, double omega11,
                                      double t1, double t3,
                                      double phi1, double phi3);

}  // namespace iongate
