#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

#include "epalg/exact_matrix.hpp"

namespace epalg {

using FloatMatrix = Eigen::MatrixXcd;
using FloatVector = Eigen::VectorXcd;

struct ConvergenceFailure : std::runtime_error {
  explicit ConvergenceFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Deterministic conversion (round-to-nearest per rational component).
FloatMatrix to_float(const ExactMatrix& m);

/// Matrix exponential by scaling-and-squaring with a fixed-order truncated
/// Taylor series on the scaled matrix. Accurate to better than 1e-12
/// relative for ||A|| <= 50.
FloatMatrix mat_exp(const FloatMatrix& a);

/// One eigenvalue cluster: representative value and algebraic multiplicity.
struct EigenCluster {
  std::complex<double> value;
  std::size_t multiplicity;
};

/// Eigenvalues with algebraic multiplicities. Computed values closer than
/// `cluster_tol` are merged into one cluster. Clusters sort by (re, im).
/// Throws ConvergenceFailure if the QR iteration does not converge.
std::vector<EigenCluster> eig_spectrum(const FloatMatrix& a, double cluster_tol = 1e-8);

/// Flattened sorted eigenvalue list (each value repeated by multiplicity).
std::vector<std::complex<double>> eig_sorted(const FloatMatrix& a, double cluster_tol = 1e-8);

}  // namespace epalg
