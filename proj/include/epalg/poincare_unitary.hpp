#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "epalg/half_int.hpp"
#include "epalg/wave_equation.hpp"

namespace epalg {

struct InvalidVelocity : std::domain_error {
  explicit InvalidVelocity(const std::string& what) : std::domain_error(what) {}
};

struct NotARotation : std::runtime_error {
  explicit NotARotation(const std::string& what) : std::runtime_error(what) {}
};

/// Proper orthochronous Lorentz matrix acting on upper-index components.
using LorentzMatrix = Eigen::Matrix4d;

/// Four-velocity (upper-index components, u.u = -1, u0 >= 1).
struct FourVelocity {
  std::array<double, 4> u{1, 0, 0, 0};

  double operator[](std::size_t i) const { return u[i]; }
  double minkowski_sq() const { return -u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3]; }
  static FourVelocity from_velocity(const std::array<double, 3>& v);
  static FourVelocity standard() { return {}; }
};

/// Checks Lambda^T eta Lambda = eta, det = +1, Lambda^0_0 >= 1 within tol.
bool is_proper_orthochronous(const LorentzMatrix& m, double tol = 1e-12);

/// Symmetric pure boost L(u) with L u_standard = u. Throws InvalidVelocity
/// unless u.u = -1 (within 1e-9) and u is future-pointing.
LorentzMatrix pure_boost(const FourVelocity& u);

/// Rotation about `axis` by `angle` embedded as a Lorentz matrix.
LorentzMatrix rotation_matrix(const std::array<double, 3>& axis, double angle);

/// Boost with 3-velocity v (|v| < 1) as a Lorentz matrix.
LorentzMatrix boost_matrix(const std::array<double, 3>& velocity);

FourVelocity apply(const LorentzMatrix& m, const FourVelocity& u);

/// Wigner rotation R_W = L^-1(Lam u) Lam L(u). Asserts the result fixes the
/// standard vector (pure rotation) within 1e-10; throws NotARotation
/// otherwise.
LorentzMatrix wigner_rotation(const LorentzMatrix& lam, const FourVelocity& u);

struct EulerZYZ {
  double alpha, beta, gamma;
};

/// z-y-z Euler angles of the spatial rotation block.
EulerZYZ euler_zyz(const LorentzMatrix& rotation);

struct WignerD {
  HalfInt J;
  Eigen::MatrixXcd matrix;  // (2J+1) x (2J+1), rows/cols M descending
};

/// D^(J) from explicit z-y-z Euler angles (full SU(2): angles are not
/// reduced, so alpha = 2pi at half-integer J gives -I).
WignerD wigner_D_angles(HalfInt J, const EulerZYZ& angles);

/// D^(J)(R) via Euler decomposition of the rotation matrix (principal
/// angles; half-integer J is then fixed only up to the double-cover sign).
WignerD wigner_D(HalfInt J, const LorentzMatrix& rotation);

/// State |u, mu, gamma, J, M>.
struct StateLabel {
  FourVelocity u;
  double mu = 1.0;
  HalfInt gamma, J, M;
};

struct TransformedState {
  StateLabel label;                   // new u; mu, gamma, J unchanged
  Eigen::VectorXcd amplitudes;        // over M' (descending), column M of D^(J)(R_W)
};

TransformedState transform_state(const LorentzMatrix& lam, const StateLabel& s);

}  // namespace epalg
