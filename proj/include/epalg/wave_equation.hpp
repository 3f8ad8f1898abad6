#pragma once

#include <array>
#include <vector>

#include "epalg/float_matrix.hpp"
#include "epalg/representation.hpp"

namespace epalg {

struct SuperluminalVelocity : std::domain_error {
  SuperluminalVelocity() : std::domain_error("|velocity| must be < 1") {}
};

struct MixedEigenvalues : std::invalid_argument {
  MixedEigenvalues() : std::invalid_argument("plane-wave modes must share one eigenvalue") {}
};

/// Covariant (lower-index) components p_0..p_3 in natural units. The
/// standard-state convention is p_rest = (mu, 0, 0, 0), so the contraction
/// with Gamma^mu is the direct componentwise sum and the rest-frame operator
/// is mu * Gamma0.
struct FourVector {
  std::array<double, 4> p{0, 0, 0, 0};

  double& operator[](std::size_t i) { return p[i]; }
  double operator[](std::size_t i) const { return p[i]; }
  /// Minkowski square eta^{mu nu} p_mu p_nu with eta = diag(-1,+1,+1,+1).
  double minkowski_sq() const { return -p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]; }
};

/// Sum_mu Gamma^mu p_mu in the given representation, as a float matrix.
FloatMatrix slash(const Representation& rep, const FourVector& p);

/// Pure-boost action on lower-index components: p' = (eta L eta) p where L
/// is the standard upper-index boost with velocity v (|v| < 1).
FourVector boost_momentum(const FourVector& p, const std::array<double, 3>& velocity);

struct SpectrumInvarianceReport {
  double max_drift = 0.0;
  std::size_t velocities_checked = 0;
  bool pass(double tol = 1e-10) const { return max_drift < tol; }
  std::vector<EigenCluster> rest_spectrum;
};

/// Checks that the eigenvalue multiset of slash(rep, boost(p_rest)) is
/// velocity-independent (a consequence of [J, Gamma.P] = [K, Gamma.P] = 0).
SpectrumInvarianceReport spectrum_invariance(const Representation& rep, double mass,
                                             const std::vector<std::array<double, 3>>& velocities);

struct PlaneWaveSolution {
  double eigenvalue = 0.0;
  FourVector momentum;
  FloatVector amplitude;
};

/// Eigensolutions of slash(rep, p) whose eigenvalue is within cluster_tol of
/// `target`; amplitudes are the eigenvectors.
std::vector<PlaneWaveSolution> plane_wave_solutions(const Representation& rep,
                                                    const FourVector& p, double target,
                                                    double cluster_tol = 1e-8);

struct GridSpec {
  double h = 0.01;  // spacing
  int n = 6;        // points per axis (interior gets central differences)
};

struct CurrentSample {
  double h = 0.0;
  std::vector<double> divergence;  // |d_mu j^mu| on interior grid points
  double max_abs_divergence = 0.0;
  double current_scale = 0.0;  // max |j| over the grid, for relative bounds
  bool pseudo_hermitian = true;
};

/// Central-difference divergence of j^mu(x) = (g psi)^dag Gamma^mu psi for a
/// superposition of equal-eigenvalue plane waves psi(x) = sum a_i e^{i p_i.x}.
/// Throws MixedEigenvalues when the modes disagree on lambda.
CurrentSample current_divergence(const Representation& rep,
                                 const std::vector<PlaneWaveSolution>& sols, const GridSpec& grid);

}  // namespace epalg
