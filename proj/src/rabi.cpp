#include "iongate/rabi.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace iongate {

namespace {

void check_query(const RabiQuery& q) {
  if (q.eta < 0.0) throw std::invalid_argument("eta must be non-negative");
  if (q.k < 0) throw std::invalid_argument("k must be non-negative");
  if (q.m_lower < 0) throw std::invalid_argument("m_lower must be non-negative");
}

// sqrt((m_lower + k)! / m_lower!) as a plain product of k factors
double pair_factor(int m_lower, int k) {
  double prod = 1.0;
  for (int i = 1; i <= k; ++i) prod *= m_lower + i;
  return std::sqrt(prod);
}

}  // namespace

double rabi_sum(const RabiQuery& q) {
  check_query(q);
  const int j = q.m_lower;
  const double x = q.eta * q.eta;
  // sum_{n=0}^{j} (-x)^n C(j,n) / (k+n)!, each term derived from the previous
  // one by a ratio, so no factorial is ever formed
  double term = 1.0;
  for (int i = 1; i <= q.k; ++i) term /= i;
  double sum = term;
  for (int n = 0; n < j; ++n) {
    term *= -x * (j - n) / ((n + 1.0) * (q.k + n + 1.0));
    sum += term;
  }
  return 0.5 * std::pow(q.eta, q.k) * std::exp(-0.5 * x) * pair_factor(j, q.k) * sum;
}

double laguerre_assoc(int n, int alpha, double x) {
  if (n < 0 || alpha < 0) throw std::invalid_argument("laguerre indices must be non-negative");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int i = 2; i <= n; ++i) {
    const double next = ((2.0 * i - 1.0 + alpha - x) * cur - (i - 1.0 + alpha) * prev) / i;
    prev = cur;
    cur = next;
  }
  return cur;
}

double rabi_laguerre(const RabiQuery& q) {
  check_query(q);
  const double x = q.eta * q.eta;
  return 0.5 * std::exp(-0.5 * x) * std::pow(q.eta, q.k) *
         laguerre_assoc(q.m_lower, q.k, x) / pair_factor(q.m_lower, q.k);
}

namespace {

// <m_lower| exp[i eta (a + a^dag)] |m_lower + k> on a space truncated at T,
// reduced to its signed real value by stripping the known (-i)^k phase
double displacement_element(double eta, int k, int m_lower, int T) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(T + 1, T + 1);
  for (int i = 0; i < T; ++i) {
    a(i, i + 1) = std::sqrt(i + 1.0);
    a(i + 1, i) = std::sqrt(i + 1.0);
  }
  const Eigen::MatrixXcd u = (std::complex<double>(0.0, eta) * a).exp();
  static const std::complex<double> minus_i_pow[4] = {
      {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
  const std::complex<double> v = minus_i_pow[k % 4] * u(m_lower, m_lower + k);
  if (std::abs(v.imag()) > 1e-10)
    throw std::runtime_error("displacement element has an unexpected phase");
  return 0.5 * v.real();
}

}  // namespace

double rabi_oracle(const RabiQuery& q, int truncation) {
  check_query(q);
  if (truncation < q.m_lower + q.k)
    throw std::invalid_argument("truncation too small to hold the coupled pair");
  const double value = displacement_element(q.eta, q.k, q.m_lower, truncation);
  const double check = displacement_element(q.eta, q.k, q.m_lower, truncation + 10);
  if (std::abs(value - check) > 1e-12) {
    std::ostringstream msg;
    msg << "truncation " << truncation << " too small: value moved by "
        << std::abs(value - check) << " when enlarged";
    throw std::runtime_error(msg.str());
  }
  return value;
}

}  // namespace iongate
