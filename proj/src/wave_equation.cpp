#include "epalg/wave_equation.hpp"

#include <cmath>

namespace epalg {

FloatMatrix slash(const Representation& rep, const FourVector& p) {
  FloatMatrix m = FloatMatrix::Zero(static_cast<Eigen::Index>(rep.dim),
                                    static_cast<Eigen::Index>(rep.dim));
  for (int mu = 0; mu <= 3; ++mu) {
    if (p[static_cast<std::size_t>(mu)] == 0.0) continue;
    m += to_float(rep.mat_or_zero(gamma_mu(mu))) * p[static_cast<std::size_t>(mu)];
  }
  return m;
}

FourVector boost_momentum(const FourVector& p, const std::array<double, 3>& velocity) {
  const double v2 = velocity[0] * velocity[0] + velocity[1] * velocity[1] +
                    velocity[2] * velocity[2];
  if (v2 >= 1.0) throw SuperluminalVelocity();
  if (v2 == 0.0) return p;
  const double gamma = 1.0 / std::sqrt(1.0 - v2);
  // lower-index action eta L eta: time-space blocks change sign
  FourVector out;
  const double pt = p[0];
  const std::array<double, 3> ps{p[1], p[2], p[3]};
  double vdotp = velocity[0] * ps[0] + velocity[1] * ps[1] + velocity[2] * ps[2];
  out[0] = gamma * (pt - vdotp);
  for (int k = 0; k < 3; ++k)
    out[static_cast<std::size_t>(k + 1)] =
        ps[static_cast<std::size_t>(k)] +
        ((gamma - 1.0) * vdotp / v2 - gamma * pt) * velocity[static_cast<std::size_t>(k)];
  return out;
}

SpectrumInvarianceReport spectrum_invariance(const Representation& rep, double mass,
                                             const std::vector<std::array<double, 3>>& velocities) {
  SpectrumInvarianceReport report;
  FourVector rest{{mass, 0, 0, 0}};
  auto ref = eig_sorted(slash(rep, rest));
  report.rest_spectrum = eig_spectrum(slash(rep, rest));
  report.velocities_checked = velocities.size();
  for (const auto& v : velocities) {
    auto spec = eig_sorted(slash(rep, boost_momentum(rest, v)));
    double drift = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i)
      drift = std::max(drift, std::abs(spec[i] - ref[i]));
    report.max_drift = std::max(report.max_drift, drift);
  }
  return report;
}

std::vector<PlaneWaveSolution> plane_wave_solutions(const Representation& rep,
                                                    const FourVector& p, double target,
                                                    double cluster_tol) {
  FloatMatrix op = slash(rep, p);
  Eigen::ComplexEigenSolver<FloatMatrix> solver(op, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("plane-wave eigen decomposition failed");
  std::vector<PlaneWaveSolution> out;
  for (Eigen::Index k = 0; k < op.rows(); ++k) {
    std::complex<double> lam = solver.eigenvalues()(k);
    if (std::abs(lam - std::complex<double>(target, 0)) < cluster_tol) {
      PlaneWaveSolution s;
      s.eigenvalue = target;
      s.momentum = p;
      s.amplitude = solver.eigenvectors().col(k);
      out.push_back(std::move(s));
    }
  }
  return out;
}

CurrentSample current_divergence(const Representation& rep,
                                 const std::vector<PlaneWaveSolution>& sols,
                                 const GridSpec& grid) {
  if (sols.empty()) throw MixedEigenvalues();
  for (const auto& s : sols)
    if (std::abs(s.eigenvalue - sols.front().eigenvalue) > 1e-8) throw MixedEigenvalues();
  if (grid.h <= 0) throw std::invalid_argument("grid spacing must be positive");

  const std::size_t dim = rep.dim;
  CurrentSample sample;
  sample.h = grid.h;

  // exact pseudo-hermiticity diagnostic: g^-1 Gamma^mu^dag g == Gamma^mu
  {
    ExactMatrix ginv = rep.metric.inverse();
    for (int mu = 0; mu <= 3; ++mu) {
      ExactMatrix gm = rep.mat_or_zero(gamma_mu(mu));
      if (ginv * gm.dagger() * rep.metric != gm) sample.pseudo_hermitian = false;
    }
  }

  std::array<FloatMatrix, 4> g_gamma;
  FloatMatrix gf = to_float(rep.metric);
  for (int mu = 0; mu <= 3; ++mu)
    g_gamma[static_cast<std::size_t>(mu)] = gf * to_float(rep.mat_or_zero(gamma_mu(mu)));

  const int n = grid.n;
  auto psi_at = [&](const std::array<double, 4>& x) {
    FloatVector psi = FloatVector::Zero(static_cast<Eigen::Index>(dim));
    for (const auto& s : sols) {
      double phase = 0.0;
      for (std::size_t mu = 0; mu < 4; ++mu) phase += s.momentum[mu] * x[mu];
      psi += s.amplitude * std::exp(std::complex<double>(0, phase));
    }
    return psi;
  };
  auto current_at = [&](const std::array<double, 4>& x) {
    FloatVector psi = psi_at(x);
    std::array<double, 4> j{};
    for (std::size_t mu = 0; mu < 4; ++mu) {
      // j^mu = (g psi)^dag Gamma^mu psi = psi^dag (g Gamma^mu) psi; g real diag
      std::complex<double> val = psi.dot(g_gamma[mu] * psi);
      j[mu] = val.real();
    }
    return j;
  };

  for (int i0 = 1; i0 + 1 < n; ++i0)
    for (int i1 = 1; i1 + 1 < n; ++i1)
      for (int i2 = 1; i2 + 1 < n; ++i2)
        for (int i3 = 1; i3 + 1 < n; ++i3) {
          std::array<double, 4> x{i0 * grid.h, i1 * grid.h, i2 * grid.h, i3 * grid.h};
          double div = 0.0;
          for (std::size_t mu = 0; mu < 4; ++mu) {
            std::array<double, 4> xp = x, xm = x;
            xp[mu] += grid.h;
            xm[mu] -= grid.h;
            div += (current_at(xp)[mu] - current_at(xm)[mu]) / (2 * grid.h);
          }
          sample.divergence.push_back(std::abs(div));
          sample.max_abs_divergence = std::max(sample.max_abs_divergence, std::abs(div));
          auto j = current_at(x);
          for (double c : j) sample.current_scale = std::max(sample.current_scale, std::abs(c));
        }
  return sample;
}

}  // namespace epalg
