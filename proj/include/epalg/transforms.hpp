#pragma once

#include <array>
#include <optional>

#include "epalg/algebra_checks.hpp"
#include "epalg/float_matrix.hpp"
#include "epalg/wave_equation.hpp"

namespace epalg {

struct DecompositionResidual : std::runtime_error {
  explicit DecompositionResidual(const std::string& what) : std::runtime_error(what) {}
};

enum class OmegaClass { Timelike, Spacelike, Null };

/// Group parameter conjugate to Gamma^mu, omega_mu = omega * u_mu.
struct OmegaParameter {
  FourVector omega;
  OmegaClass cls() const {
    double s = omega.minkowski_sq();
    if (s < 0) return OmegaClass::Timelike;
    if (s > 0) return OmegaClass::Spacelike;
    return OmegaClass::Null;
  }
  /// sqrt(-omega.omega) for timelike omega, sqrt(omega.omega) for spacelike.
  double magnitude() const { return std::sqrt(std::abs(omega.minkowski_sq())); }
};

/// Measured expansion of a conjugated generator over the 15-generator basis,
/// with the off-span residual (must stay below tolerance: closure).
struct Decomposition {
  std::array<double, 15> coeff{};
  double residual = 0.0;

  double g_coeff() const { return coeff[static_cast<std::size_t>(index_of(Gen::G))]; }
  std::array<double, 4> p_coeff() const {
    return {coeff[10], coeff[11], coeff[12], coeff[13]};
  }
  std::array<double, 4> gamma_coeff() const {
    return {coeff[6], coeff[7], coeff[8], coeff[9]};
  }
};

/// Predicted coefficients from the closed-form conjugation identities.
struct GammaConjugationPrediction {
  double g_coeff;                  // cos / cosh factor
  std::array<double, 4> p_coeff;   // sin(theta)/theta * omega_mu eta^{mu nu} (on G)
};

class AdjointTransforms {
 public:
  AdjointTransforms();

  /// exp(i omega.Gamma) G exp(-i omega.Gamma), measured in the adjoint.
  Decomposition conjugate_G_by_gamma(const OmegaParameter& omega) const;
  GammaConjugationPrediction predict_G_by_gamma(const OmegaParameter& omega) const;

  /// exp(i omega.Gamma) P_beta exp(-i omega.Gamma).
  Decomposition conjugate_P_by_gamma(const OmegaParameter& omega, int beta) const;
  /// predicted: G-coefficient omega_beta sin(theta)/theta and P-block
  /// delta_beta^nu + omega_beta omega^nu / (omega.omega) (cos(theta) - 1).
  std::pair<double, std::array<double, 4>> predict_P_by_gamma(const OmegaParameter& omega,
                                                              int beta) const;

  /// exp(i alpha G) Gamma^mu exp(-i alpha G) = Gamma^mu + alpha eta^{mu nu} P_nu.
  Decomposition conjugate_gamma_by_G(double alpha, int mu) const;

  /// exp(i a^beta P_beta) Gamma^mu exp(-i ...) = Gamma^mu + a^mu G.
  Decomposition conjugate_gamma_by_P(const std::array<double, 4>& a_upper, int mu) const;

  /// Exact order-2 termination checks: (ad_G)^2 Gamma^mu = 0 and
  /// (ad_P)^2 Gamma^mu = 0 in exact arithmetic.
  bool nilpotency_exact() const;

  /// Exact conjugation by G at parameter alpha (rational): the series
  /// terminates at order 2, so the result is exact.
  ExactMatrix conjugate_gamma_by_G_exact(const Rational& alpha, int mu) const;

  const Representation& adjoint() const { return adjoint_; }

 private:
  Decomposition decompose(const FloatMatrix& m) const;
  FloatMatrix conjugate(const FloatMatrix& exponent_arg, Gen target) const;

  Representation adjoint_;
  std::array<FloatMatrix, 15> ad_float_;
  Eigen::MatrixXcd basis_;  // 225 x 15, vectorized ad matrices
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> basis_solver_;
};

}  // namespace epalg
