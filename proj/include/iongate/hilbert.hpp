// Joint Hilbert space of a single trapped ion: a two-level electronic state
// tensored with a truncated harmonic (Fock) mode of the trap.
#pragma once

#include <complex>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

namespace iongate {

using Complex = std::complex<double>;

// shared numerical tolerances
inline constexpr double kUnitaryTol = 1e-12;     // max |U^dag U - I|
inline constexpr double kNormTol = 1e-12;        // state norm drift under apply()
inline constexpr double kDefaultLeakTol = 1e-10; // tolerated guard-band occupation

// thrown when probability accumulates in the guard band at the top of the
// truncated Fock space; it means the truncation cannot be trusted
struct GuardBandError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Level : int { g = 0, e = 1 };

// ordering: |m,g> -> 2m, |m,e> -> 2m+1
int state_index(int m, Level s);
std::pair<int, Level> index_to_state(int index);

struct TrapConfig {
  double eta;     // Lamb-Dicke parameter, strictly inside (0, 1)
  int k;          // sideband order the trap is driven with (0 = carrier only)
  int truncation; // highest retained Fock index N
  int guard;      // top Fock levels reserved as a leakage sentinel

  int dim() const { return 2 * (truncation + 1); }
  void validate() const;

  // defaults: truncation 32, guard max(k, 4)
  static TrapConfig make(double eta, int k);
  static TrapConfig make(double eta, int k, int truncation, int guard);
};

class UnitaryMatrix {
 public:
  // rejects anything whose unitarity defect exceeds kUnitaryTol
  explicit UnitaryMatrix(Eigen::MatrixXcd u);

  const Eigen::MatrixXcd& matrix() const { return u_; }
  int dim() const { return static_cast<int>(u_.rows()); }

  static double unitarity_defect(const Eigen::MatrixXcd& u);

 private:
  Eigen::MatrixXcd u_;
};

class JointState {
 public:
  // amplitudes must have norm within norm_tol of 1; stored exactly normalized
  JointState(TrapConfig cfg, Eigen::VectorXcd amplitudes, double norm_tol = 1e-9);

  const TrapConfig& config() const { return cfg_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Complex amplitude(int m, Level s) const;

  // total probability sitting in the guard band (m > N - guard)
  double guard_occupation() const;

 private:
  TrapConfig cfg_;
  Eigen::VectorXcd amps_;
};

JointState basis_state(int m, Level s, const TrapConfig& cfg);

// psi' = U psi, with a norm check and a guard-band check on the result
JointState apply(const UnitaryMatrix& u, const JointState& psi,
                 double leak_tol = kDefaultLeakTol);

// |<a|b>|^2
double fidelity_overlap(const JointState& a, const JointState& b);

}  // namespace iongate
