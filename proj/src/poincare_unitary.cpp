#include "epalg/poincare_unitary.hpp"

#include <cmath>

namespace epalg {

namespace {
const Eigen::Vector4d kEtaDiag(-1, 1, 1, 1);

double factorial_d(int n) {
  double f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}
}  // namespace

FourVelocity FourVelocity::from_velocity(const std::array<double, 3>& v) {
  double v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  if (v2 >= 1.0) throw InvalidVelocity("|velocity| must be < 1");
  double gamma = 1.0 / std::sqrt(1.0 - v2);
  return {{gamma, gamma * v[0], gamma * v[1], gamma * v[2]}};
}

bool is_proper_orthochronous(const LorentzMatrix& m, double tol) {
  LorentzMatrix eta = kEtaDiag.asDiagonal();
  if ((m.transpose() * eta * m - eta).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(m.determinant() - 1.0) > tol) return false;
  return m(0, 0) >= 1.0 - tol;
}

LorentzMatrix pure_boost(const FourVelocity& u) {
  if (std::abs(u.minkowski_sq() + 1.0) > 1e-9 || u[0] < 1.0 - 1e-12)
    throw InvalidVelocity("four-velocity must satisfy u.u = -1 with u0 >= 1");
  LorentzMatrix l = LorentzMatrix::Identity();
  const double g = u[0];
  Eigen::Vector3d n(u[1], u[2], u[3]);
  l(0, 0) = g;
  for (int k = 0; k < 3; ++k) {
    l(0, k + 1) = n(k);
    l(k + 1, 0) = n(k);
  }
  double denom = 1.0 + g;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) l(j + 1, k + 1) = (j == k ? 1.0 : 0.0) + n(j) * n(k) / denom;
  return l;
}

LorentzMatrix rotation_matrix(const std::array<double, 3>& axis, double angle) {
  Eigen::Vector3d ax(axis[0], axis[1], axis[2]);
  if (ax.norm() == 0) throw std::invalid_argument("zero rotation axis");
  Eigen::Matrix3d r = Eigen::AngleAxisd(angle, ax.normalized()).toRotationMatrix();
  LorentzMatrix m = LorentzMatrix::Identity();
  m.block<3, 3>(1, 1) = r;
  return m;
}

LorentzMatrix boost_matrix(const std::array<double, 3>& velocity) {
  return pure_boost(FourVelocity::from_velocity(velocity));
}

FourVelocity apply(const LorentzMatrix& m, const FourVelocity& u) {
  Eigen::Vector4d v(u[0], u[1], u[2], u[3]);
  Eigen::Vector4d w = m * v;
  return {{w(0), w(1), w(2), w(3)}};
}

LorentzMatrix wigner_rotation(const LorentzMatrix& lam, const FourVelocity& u) {
  FourVelocity lu = apply(lam, u);
  LorentzMatrix r = pure_boost(lu).inverse() * lam * pure_boost(u);
  Eigen::Vector4d standard(1, 0, 0, 0);
  if ((r * standard - standard).cwiseAbs().maxCoeff() > 1e-10)
    throw NotARotation("Wigner rotation does not fix the standard vector");
  if ((r.block<3, 3>(1, 1).transpose() * r.block<3, 3>(1, 1) - Eigen::Matrix3d::Identity())
          .cwiseAbs()
          .maxCoeff() > 1e-10)
    throw NotARotation("Wigner rotation block is not orthogonal");
  return r;
}

EulerZYZ euler_zyz(const LorentzMatrix& rotation) {
  Eigen::Matrix3d r = rotation.block<3, 3>(1, 1);
  EulerZYZ e{};
  // R = Rz(alpha) Ry(beta) Rz(gamma); beta in [0, pi]
  double c = std::clamp(r(2, 2), -1.0, 1.0);
  e.beta = std::acos(c);
  if (std::abs(c) < 1.0 - 1e-12) {
    e.alpha = std::atan2(r(1, 2), r(0, 2));
    e.gamma = std::atan2(r(2, 1), -r(2, 0));
  } else if (c > 0) {
    // beta = 0: R = Rz(alpha + gamma); fold into alpha
    e.alpha = std::atan2(r(1, 0), r(0, 0));
    e.gamma = 0.0;
  } else {
    // beta = pi: R = Rz(alpha - gamma) Ry(pi); fold into alpha
    e.alpha = std::atan2(-r(1, 0), -r(0, 0));
    e.gamma = 0.0;
  }
  return e;
}

WignerD wigner_D_angles(HalfInt J, const EulerZYZ& angles) {
  const int tj = J.twice();
  const int dim = tj + 1;
  WignerD d{J, Eigen::MatrixXcd::Zero(dim, dim)};
  // rows/cols M descending: index r corresponds to twice-M = tj - 2r
  for (int r = 0; r < dim; ++r) {
    const double mp = (tj - 2 * r) / 2.0;  // M'
    for (int c = 0; c < dim; ++c) {
      const double m = (tj - 2 * c) / 2.0;  // M
      // little-d (Wigner sum formula)
      const double jmp = J.as_double() - mp, jpm = J.as_double() + m;
      const double jpp = J.as_double() + mp, jmm = J.as_double() - m;
      double dval = 0.0;
      int kmin = std::max(0, static_cast<int>(std::lround(m - mp)));
      int kmax = static_cast<int>(std::lround(std::min(jpm, jmp)));
      for (int k = kmin; k <= kmax; ++k) {
        double num = std::sqrt(factorial_d(static_cast<int>(jpp)) *
                               factorial_d(static_cast<int>(jmp)) *
                               factorial_d(static_cast<int>(jpm)) *
                               factorial_d(static_cast<int>(jmm)));
        double den = factorial_d(static_cast<int>(jpm) - k) * factorial_d(k) *
                     factorial_d(static_cast<int>(std::lround(mp - m)) + k) *
                     factorial_d(static_cast<int>(jmp) - k);
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        double cb = std::cos(angles.beta / 2), sb = std::sin(angles.beta / 2);
        dval += sign * (num / den) *
                std::pow(cb, static_cast<int>(std::lround(2 * J.as_double() + m - mp)) - 2 * k) *
                std::pow(-sb, static_cast<int>(std::lround(mp - m)) + 2 * k);
      }
      // phase convention fixed by D^(1)(Rz(theta)) = diag(e^{i theta}, 1, e^{-i theta})
      std::complex<double> phase =
          std::exp(std::complex<double>(0, mp * angles.alpha + m * angles.gamma));
      d.matrix(r, c) = phase * dval;
    }
  }
  return d;
}

WignerD wigner_D(HalfInt J, const LorentzMatrix& rotation) {
  return wigner_D_angles(J, euler_zyz(rotation));
}

TransformedState transform_state(const LorentzMatrix& lam, const StateLabel& s) {
  LorentzMatrix rw = wigner_rotation(lam, s.u);
  WignerD d = wigner_D(s.J, rw);
  TransformedState out;
  out.label = s;
  out.label.u = apply(lam, s.u);
  const int col = (s.J.twice() - s.M.twice()) / 2;  // M-descending index
  out.amplitudes = d.matrix.col(col);
  return out;
}

}  // namespace epalg
