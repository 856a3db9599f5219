#include "iongate/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace iongate {

namespace {
constexpr Complex kMinusI{0.0, -1.0};
}

Eigen::Matrix2cd ideal_hadamard() {
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  return h / std::numbers::sqrt2;
}

Eigen::Matrix4cd ideal_cz() {
  Eigen::Matrix4cd g = Eigen::Matrix4cd::Identity();
  g(3, 3) = -1.0;
  return g;
}

Eigen::Matrix4cd ideal_cn() {
  Eigen::Matrix4cd g = Eigen::Matrix4cd::Identity();
  g(2, 2) = g(3, 3) = 0.0;
  g(2, 3) = g(3, 2) = 1.0;
  return g;
}

Eigen::Matrix4cd reduced_cn_phase_gate(double phi) {
  Eigen::Matrix4cd g = Eigen::Matrix4cd::Identity();
  g(2, 2) = g(3, 3) = 0.0;
  g(2, 3) = kMinusI * std::polar(1.0, phi);
  g(3, 2) = kMinusI * std::polar(1.0, -phi);
  return g;
}

RestrictionReport restrict_to_gamma(const UnitaryMatrix& u, const TrapConfig& cfg) {
  cfg.validate();
  if (cfg.truncation < 1 + cfg.guard)
    throw std::invalid_argument("computational subspace overlaps the guard band");
  if (u.dim() != cfg.dim())
    throw std::invalid_argument("unitary dimension does not match the trap");
  RestrictionReport report;
  // Gamma occupies the first four slots thanks to the index convention
  report.block = u.matrix().topLeftCorner<4, 4>();
  report.leakage = 0.0;
  const int rest = u.dim() - 4;
  for (int col = 0; col < 4; ++col)
    report.leakage = std::max(report.leakage, u.matrix().block(4, col, rest, 1).norm());
  return report;
}

BlockReport restrict_to_fock_block(const UnitaryMatrix& u, const TrapConfig& cfg, int m) {
  cfg.validate();
  if (m < 0 || m > cfg.truncation - cfg.guard)
    throw std::invalid_argument("block index must stay below the guard band");
  if (u.dim() != cfg.dim())
    throw std::invalid_argument("unitary dimension does not match the trap");
  const int base = state_index(m, Level::g);
  BlockReport report;
  report.block = u.matrix().block<2, 2>(base, base);
  report.leakage = 0.0;
  for (int col = base; col < base + 2; ++col) {
    const double total = u.matrix().col(col).norm();
    const double inside = u.matrix().block<2, 1>(base, col).norm();
    report.leakage = std::max(
        report.leakage, std::sqrt(std::max(0.0, total * total - inside * inside)));
  }
  return report;
}

double gate_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrices differ in shape");
  return (a - b).cwiseAbs().maxCoeff();
}

double phase_insensitive_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrices differ in shape");
  return 1.0 - std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
}

Eigen::Matrix4cd cn_entry_closed_form(double omega00, double omega11,
                                      double t1, double t3,
                                      double phi1, double phi3) {
  const double c1 = std::cos(omega00 * t1), s1 = std::sin(omega00 * t1);
  const double c3 = std::cos(omega00 * t3), s3 = std::sin(omega00 * t3);
  const double d1 = std::cos(omega11 * t1), r1 = std::sin(omega11 * t1);
  const double d3 = std::cos(omega11 * t3), r3 = std::sin(omega11 * t3);
  const Complex e1 = std::polar(1.0, phi1);
  const Complex e3 = std::polar(1.0, phi3);

  Eigen::Matrix4cd a = Eigen::Matrix4cd::Zero();
  a(0, 0) = c3 * c1 - e3 / e1 * s3 * s1;
  a(0, 1) = kMinusI * e1 * c3 * s1 + kMinusI * e3 * s3 * c1;
  a(1, 0) = kMinusI / e3 * s3 * c1 + kMinusI / e1 * c3 * s1;
  a(1, 1) = c3 * c1 - e1 / e3 * s3 * s1;
  a(2, 2) = d3 * d1 + e3 / e1 * r3 * r1;
  a(2, 3) = kMinusI * e1 * d3 * r1 - kMinusI * e3 * r3 * d1;
  // this entry is the known-bad one; the direct product gives
  // -i e^{-i phi3} r3 d1 + i e^{-i phi1} d3 r1 instead
  a(3, 2) = kMinusI * e1 * d3 * r1 - kMinusI * e3 * r3 * d1;
  a(3, 3) = -d3 * d1 - e1 / e3 * r3 * r1;
  return a;
}

}  // namespace iongate
