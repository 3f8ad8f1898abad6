#include "epalg/float_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace epalg {

FloatMatrix to_float(const ExactMatrix& m) {
  FloatMatrix f(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) f(i, j) = m.at(i, j).to_complex();
  return f;
}

FloatMatrix mat_exp(const FloatMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("mat_exp: not square");
  const Eigen::Index n = a.rows();
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  FloatMatrix b = a * scale;
  // Taylor to fixed order 18; with ||B|| <= 1/2 the tail is < 2^-19/19! ~ 1e-23
  FloatMatrix term = FloatMatrix::Identity(n, n);
  FloatMatrix sum = term;
  for (int k = 1; k <= 18; ++k) {
    term = (term * b) / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

std::vector<EigenCluster> eig_spectrum(const FloatMatrix& a, double cluster_tol) {
  if (a.rows() != a.cols()) throw DimensionMismatch("eig_spectrum: not square");
  Eigen::ComplexEigenSolver<FloatMatrix> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("eigenvalue iteration budget exceeded");
  std::vector<std::complex<double>> vals(solver.eigenvalues().data(),
                                         solver.eigenvalues().data() + a.rows());
  std::sort(vals.begin(), vals.end(), [](const auto& x, const auto& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  std::vector<EigenCluster> clusters;
  for (const auto& v : vals) {
    if (!clusters.empty() && std::abs(v - clusters.back().value) < cluster_tol) {
      ++clusters.back().multiplicity;
    } else {
      clusters.push_back({v, 1});
    }
  }
  return clusters;
}

std::vector<std::complex<double>> eig_sorted(const FloatMatrix& a, double cluster_tol) {
  std::vector<std::complex<double>> out;
  for (const auto& c : eig_spectrum(a, cluster_tol))
    for (std::size_t k = 0; k < c.multiplicity; ++k) out.push_back(c.value);
  return out;
}

}  // namespace epalg
