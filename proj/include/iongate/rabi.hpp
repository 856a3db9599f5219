// Rabi frequencies of k-quantum red-sideband transitions between Fock levels
// |m_lower> and |m_lower + k>, valid for any Lamb-Dicke parameter. The base
// (two-level, eta = 0) Rabi frequency is normalized to 1, so values here are
// dimensionless and durations are theta = Omega t.
//
// Three independent evaluation routes are provided; they agree to near machine
// precision and the brute-force one serves as the oracle for the other two.
#pragma once

namespace iongate {

struct RabiQuery {
  double eta;   // Lamb-Dicke parameter, >= 0 here (the trap bound is checked elsewhere)
  int k;        // number of phonons exchanged
  int m_lower;  // lower Fock index of the coupled pair
};

// finite binomial sum; factorials handled multiplicatively so large m stays finite
double rabi_sum(const RabiQuery& q);

// associated-Laguerre closed form,
//   (1/2) e^{-eta^2/2} eta^k sqrt(m_lower!/(m_lower+k)!) L^k_{m_lower}(eta^2)
double rabi_laguerre(const RabiQuery& q);

// brute force on a Fock space truncated at `truncation`: the signed real part
// of (-i)^k <m_lower| exp[i eta (a + a^dag)] |m_lower + k> / 2, computed with a
// dense matrix exponential. Throws if enlarging the truncation by 10 moves the
// result by more than 1e-12 (truncation too small).
double rabi_oracle(const RabiQuery& q, int truncation);

// associated Laguerre polynomial L^alpha_n(x) by the three-term recurrence
double laguerre_assoc(int n, int alpha, double x);

}  // namespace iongate
