#include "iongate/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace iongate {

int state_index(int m, Level s) { return 2 * m + static_cast<int>(s); }

std::pair<int, Level> index_to_state(int index) {
  if (index < 0) throw std::invalid_argument("state index must be non-negative");
  return {index / 2, static_cast<Level>(index % 2)};
}

void TrapConfig::validate() const {
  if (!(eta > 0.0 && eta < 1.0))
    throw std::invalid_argument("Lamb-Dicke parameter must lie strictly in (0, 1)");
  if (k < 0) throw std::invalid_argument("sideband order must be non-negative");
  if (guard < k)
    throw std::invalid_argument("guard band must be at least the sideband order");
  if (truncation < k + guard)
    throw std::invalid_argument("truncation must be at least k + guard");
}

TrapConfig TrapConfig::make(double eta, int k) {
  return make(eta, k, 32, std::max(k, 4));
}

TrapConfig TrapConfig::make(double eta, int k, int truncation, int guard) {
  TrapConfig cfg{eta, k, truncation, guard};
  cfg.validate();
  return cfg;
}

double UnitaryMatrix::unitarity_defect(const Eigen::MatrixXcd& u) {
  const auto n = u.rows();
  return (u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

UnitaryMatrix::UnitaryMatrix(Eigen::MatrixXcd u) : u_(std::move(u)) {
  if (u_.rows() != u_.cols())
    throw std::invalid_argument("unitary matrix must be square");
  const double defect = unitarity_defect(u_);
  if (!(defect < kUnitaryTol)) {
    std::ostringstream msg;
    msg << "matrix is not unitary (defect " << defect << ")";
    throw std::invalid_argument(msg.str());
  }
}

JointState::JointState(TrapConfig cfg, Eigen::VectorXcd amplitudes, double norm_tol)
    : cfg_(cfg), amps_(std::move(amplitudes)) {
  cfg_.validate();
  if (amps_.size() != cfg_.dim())
    throw std::invalid_argument("amplitude vector does not match the trap dimension");
  const double norm = amps_.norm();
  if (std::abs(norm - 1.0) > norm_tol) {
    std::ostringstream msg;
    msg << "state norm " << norm << " deviates from 1 beyond " << norm_tol;
    throw std::invalid_argument(msg.str());
  }
  amps_ /= norm;
}

Complex JointState::amplitude(int m, Level s) const {
  if (m < 0 || m > cfg_.truncation)
    throw std::out_of_range("Fock index exceeds truncation");
  return amps_[state_index(m, s)];
}

double JointState::guard_occupation() const {
  const int first_guarded = cfg_.truncation - cfg_.guard + 1;
  double occ = 0.0;
  for (int m = first_guarded; m <= cfg_.truncation; ++m)
    occ += std::norm(amps_[state_index(m, Level::g)]) +
           std::norm(amps_[state_index(m, Level::e)]);
  return occ;
}

JointState basis_state(int m, Level s, const TrapConfig& cfg) {
  cfg.validate();
  if (m < 0) throw std::invalid_argument("Fock index must be non-negative");
  if (m > cfg.truncation) throw std::invalid_argument("Fock index exceeds truncation");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(cfg.dim());
  amps[state_index(m, s)] = 1.0;
  return JointState(cfg, std::move(amps));
}

JointState apply(const UnitaryMatrix& u, const JointState& psi, double leak_tol) {
  if (u.dim() != psi.config().dim())
    throw std::invalid_argument("unitary dimension does not match the state");
  Eigen::VectorXcd out = u.matrix() * psi.amplitudes();
  const double norm = out.norm();
  if (std::abs(norm - 1.0) > kNormTol) {
    std::ostringstream msg;
    msg << "norm drifted to " << norm << " under a supposedly unitary map";
    throw std::runtime_error(msg.str());
  }
  JointState result(psi.config(), std::move(out));
  const double occ = result.guard_occupation();
  if (occ > leak_tol) {
    std::ostringstream msg;
    msg << "guard band occupation " << occ << " exceeds " << leak_tol
        << "; raise the truncation";
    throw GuardBandError(msg.str());
  }
  return result;
}

double fidelity_overlap(const JointState& a, const JointState& b) {
  if (a.config().dim() != b.config().dim())
    throw std::invalid_argument("states live in different spaces");
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

}  // namespace iongate
