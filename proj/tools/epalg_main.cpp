// epalg: exact verification engine for the extended Poincare algebra.
// Subcommands mirror the module map; every check emits a deterministic
// report (json or aligned table) and the exit code encodes the outcome:
// 0 = all checks pass, 1 = usage error, 2 = verification failure,
// 3 = internal error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <algorithm>
#include <random>

#include "epalg/algebra_checks.hpp"
#include "epalg/cohomology.hpp"
#include "epalg/matrix_reps.hpp"
#include "epalg/poincare_unitary.hpp"
#include "epalg/rep_json.hpp"
#include "epalg/report.hpp"
#include "epalg/transforms.hpp"
#include "epalg/wave_equation.hpp"

namespace {

using namespace epalg;
using nlohmann::json;

std::vector<CheckReport> run_jacobi_checks() {
  std::vector<CheckReport> out;
  StructureConstants sc = build_algebra();
  JacobiReport r = check_jacobi(sc);
  CheckReport c;
  c.name = "jacobi/full-algebra";
  c.status = r.clean() ? CheckStatus::Pass : CheckStatus::Fail;
  c.residual = Residual::exact();
  c.details = std::to_string(r.triples_checked) + " triples, " +
              std::to_string(r.failures.size()) + " failures";
  out.push_back(c);

  // the closure argument: deleting the Gamma-P bracket must break Jacobi
  StructureConstants broken = build_algebra();
  for (int mu = 0; mu <= 3; ++mu) broken.erase_bracket(gamma_mu(mu), momentum_mu(mu));
  JacobiReport rb = check_jacobi(broken);
  bool p_gamma_triple_fails = false;
  for (const auto& f : rb.failures) {
    bool has_p = false, has_gam0 = false, has_gamk = false;
    for (Gen g : f.triple) {
      if (g == Gen::P1 || g == Gen::P2 || g == Gen::P3) has_p = true;
      if (g == Gen::Gam0) has_gam0 = true;
      if (g == Gen::Gam1 || g == Gen::Gam2 || g == Gen::Gam3) has_gamk = true;
    }
    if (has_p && has_gam0 && has_gamk) p_gamma_triple_fails = true;
  }
  CheckReport c2;
  c2.name = "jacobi/deleted-gamma-p-bracket-fails";
  c2.status = (!rb.clean() && p_gamma_triple_fails) ? CheckStatus::Pass : CheckStatus::Fail;
  c2.residual = Residual::exact();
  c2.details = std::to_string(rb.failures.size()) +
               " failing triples incl. (P_j, Gam0, Gam^k)";
  out.push_back(c2);

  JacobiReport rs = check_jacobi(build_su2(), 3);
  CheckReport c3;
  c3.name = "jacobi/su2-subtable";
  c3.status = rs.clean() ? CheckStatus::Pass : CheckStatus::Fail;
  c3.residual = Residual::exact();
  c3.details = "control input";
  out.push_back(c3);
  return out;
}

std::vector<CheckReport> run_metric_checks() {
  std::vector<CheckReport> out;
  ExactMatrix eta = group_metric(build_algebra());
  auto expect = [&](Gen a, Gen b, long v, const std::string& label) {
    CheckReport c;
    c.name = "metric/" + label;
    bool ok = eta.at(static_cast<std::size_t>(index_of(a)),
                     static_cast<std::size_t>(index_of(b))) == ExactScalar::from_int(v);
    c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    c.residual = Residual::exact();
    c.details = name_of(a) + std::string(",") + name_of(b) + " = " + std::to_string(v);
    out.push_back(c);
  };
  for (int k = 1; k <= 3; ++k) expect(rotation(k), rotation(k), -8, std::string("JJ") + std::to_string(k));
  for (int k = 1; k <= 3; ++k) expect(boost(k), boost(k), 8, std::string("KK") + std::to_string(k));
  expect(Gen::Gam0, Gen::Gam0, -8, "Gam0Gam0");
  for (int k = 1; k <= 3; ++k) expect(gamma_mu(k), gamma_mu(k), 8, std::string("GamGam") + std::to_string(k));
  // all remaining entries zero (off-diagonals and the whole P/G sector)
  bool rest_zero = true;
  for (int a = 0; a < kNumGen; ++a)
    for (int b = 0; b < kNumGen; ++b) {
      if (a == b && a < kNumLorentzGen) continue;
      if (!eta.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)).is_zero())
        rest_zero = false;
    }
  CheckReport c;
  c.name = "metric/off-diagonal-and-PG-zero";
  c.status = rest_zero ? CheckStatus::Pass : CheckStatus::Fail;
  c.residual = Residual::exact();
  out.push_back(c);
  return out;
}

std::vector<CheckReport> run_casimir_checks() {
  std::vector<CheckReport> out;
  Representation ad = adjoint_rep(build_algebra());
  CasimirReport cr = check_casimir_commutators(ad);
  for (const auto& ck : cr.checks) {
    CheckReport c;
    c.name = "casimir/" + ck.name;
    c.status = ck.pass ? CheckStatus::Pass : CheckStatus::Fail;
    c.residual = Residual::exact();
    c.details = ck.detail;
    out.push_back(c);
  }
  // eigenvalue checks on the finite-dimensional representations
  auto eigencheck = [&](const Representation& rep, const Rational& expect,
                        const std::string& label) {
    ExactMatrix c = casimir_element(CasimirKind::Lorentz).evaluate(rep);
    bool ok = c == ExactMatrix::identity(rep.dim).scaled(ExactScalar(expect));
    CheckReport r;
    r.name = "casimir/eigenvalue-" + label;
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    r.residual = Residual::exact();
    r.details = "C_Lambda = " + to_string(expect) + " I";
    out.push_back(r);
  };
  eigencheck(lambda1_rep(), Rational(6), "lambda1");
  eigencheck(dirac_rep(), make_rational(5, 2), "dirac");
  return out;
}

std::vector<CheckReport> run_cohomology_checks() {
  std::vector<CheckReport> out;
  auto record = [&](const std::string& label, const CentralExtensionReport& r,
                    std::size_t expect) {
    CheckReport c;
    c.name = "cohomology/" + label;
    c.status = (r.dim_h2 == expect) ? CheckStatus::Pass : CheckStatus::Fail;
    c.residual = Residual::exact();
    c.details = "dim H^2 = " + std::to_string(r.dim_h2) + " (rank d1 = " +
                std::to_string(r.rank_d1) + ", rank d2 = " + std::to_string(r.rank_d2) + ")";
    out.push_back(c);
  };
  record("extended-poincare", check_central_extensions(build_algebra()), 0);
  record("su2-control", check_central_extensions(build_su2(), 3), 0);
  record("abelian2-control", check_central_extensions(StructureConstants{}, 2), 1);
  return out;
}

Representation build_rep(const std::string& source, HalfInt lambda) {
  if (source == "paper") {
    if (lambda != HalfInt::from_int(1))
      throw CLI::ValidationError("--source paper provides Lambda=1 only");
    return lambda1_rep();
  }
  if (source == "dirac") {
    if (lambda.twice() != 1)
      throw CLI::ValidationError("--source dirac provides Lambda=1/2 only");
    return dirac_rep();
  }
  if (source == "synthesize") return synthesize_rep(lambda);
  throw CLI::ValidationError("unknown --source (use paper|dirac|synthesize)");
}

std::vector<CheckReport> validation_to_reports(const Representation& rep,
                                               const std::string& prefix) {
  std::vector<CheckReport> out;
  for (const auto& ck : rep.validation.checks) {
    CheckReport c;
    c.name = prefix + "/" + ck.name;
    bool amended_pass = ck.pass && !rep.manifest.empty() && ck.name.rfind("closure", 0) == 0;
    c.status = ck.pass ? (amended_pass ? CheckStatus::Amended : CheckStatus::Pass)
                       : CheckStatus::Fail;
    if (ck.exact)
      c.residual = Residual::exact();
    else
      c.residual = Residual::of(ck.residual);
    c.details = ck.detail;
    if (amended_pass)
      c.details += " [" + std::to_string(rep.manifest.size()) + " amendments, see MANIFEST]";
    out.push_back(c);
  }
  return out;
}

std::vector<std::array<double, 3>> seeded_velocities(unsigned seed, std::size_t n) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> mag(0.0, 0.9);
  std::uniform_real_distribution<double> dir(-1.0, 1.0);
  std::vector<std::array<double, 3>> out;
  while (out.size() < n) {
    std::array<double, 3> v{dir(rng), dir(rng), dir(rng)};
    double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (norm == 0) continue;
    double m = mag(rng);
    for (auto& x : v) x *= m / norm;
    out.push_back(v);
  }
  return out;
}

// ---- transform subcommand helpers --------------------------------------

CheckReport gamma_transform_check(const AdjointTransforms& at, const OmegaParameter& om,
                                  const std::string& label, double tol) {
  Decomposition d = at.conjugate_G_by_gamma(om);
  GammaConjugationPrediction p = at.predict_G_by_gamma(om);
  double err = std::abs(d.g_coeff() - p.g_coeff);
  for (int nu = 0; nu <= 3; ++nu)
    err = std::max(err, std::abs(d.p_coeff()[static_cast<std::size_t>(nu)] -
                                 p.p_coeff[static_cast<std::size_t>(nu)]));
  // the rest of the decomposition must vanish
  for (int a = 0; a < kNumGen; ++a) {
    Gen g = gen_at(a);
    if (g == Gen::G || is_momentum(g)) continue;
    err = std::max(err, std::abs(d.coeff[static_cast<std::size_t>(a)]));
  }
  CheckReport c;
  c.name = label;
  c.status = err < tol ? CheckStatus::Pass : CheckStatus::Fail;
  c.residual = Residual::of(err);
  c.details = "measured vs closed form; span residual " + format_float(d.residual);
  return c;
}

CheckReport p_transform_check(const AdjointTransforms& at, const OmegaParameter& om, int beta,
                              const std::string& label, double tol) {
  Decomposition d = at.conjugate_P_by_gamma(om, beta);
  auto [gpred, ppred] = at.predict_P_by_gamma(om, beta);
  double err = std::abs(d.g_coeff() - gpred);
  for (int nu = 0; nu <= 3; ++nu)
    err = std::max(err, std::abs(d.p_coeff()[static_cast<std::size_t>(nu)] -
                                 ppred[static_cast<std::size_t>(nu)]));
  CheckReport c;
  c.name = label;
  c.status = err < tol ? CheckStatus::Pass : CheckStatus::Fail;
  c.residual = Residual::of(err);
  return c;
}

OmegaParameter random_omega(std::mt19937& rng, bool timelike) {
  std::uniform_real_distribution<double> mag(0.1, 3.0);
  std::uniform_real_distribution<double> dir(-1.0, 1.0);
  double m = mag(rng);
  if (timelike) {
    // omega = m * u with u timelike unit
    std::array<double, 3> v{0.4 * dir(rng), 0.4 * dir(rng), 0.4 * dir(rng)};
    double g = 1.0 / std::sqrt(1 - v[0] * v[0] - v[1] * v[1] - v[2] * v[2]);
    return {{{m * g, m * g * v[0], m * g * v[1], m * g * v[2]}}};
  }
  // spacelike: unit spatial direction plus small time component
  std::array<double, 3> n{dir(rng), dir(rng), dir(rng)};
  double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (nn == 0) nn = 1;
  double t = 0.3 * dir(rng);
  double s = std::sqrt(1 + t * t);
  return {{{m * t, m * s * n[0] / nn, m * s * n[1] / nn, m * s * n[2] / nn}}};
}

std::vector<CheckReport> run_transform_sweep(unsigned seed, std::size_t sweeps, double tol) {
  AdjointTransforms at;
  std::mt19937 rng(seed);
  std::vector<CheckReport> out;
  double worst_timelike = 0, worst_spacelike = 0, worst_p = 0, worst_period = 0;
  for (std::size_t s = 0; s < sweeps; ++s) {
    OmegaParameter om_t = random_omega(rng, true);
    OmegaParameter om_s = random_omega(rng, false);
    auto ct = gamma_transform_check(at, om_t, "tmp", tol);
    auto cs = gamma_transform_check(at, om_s, "tmp", tol);
    worst_timelike = std::max(worst_timelike, ct.residual.value);
    worst_spacelike = std::max(worst_spacelike, cs.residual.value);
    int beta = static_cast<int>(s % 4);
    auto cp = p_transform_check(at, om_t, beta, "tmp", tol);
    worst_p = std::max(worst_p, cp.residual.value);
  }
  // 2pi periodicity of timelike omega on span{G, P}
  {
    std::uniform_real_distribution<double> dir(-1.0, 1.0);
    for (int rep = 0; rep < 5; ++rep) {
      std::array<double, 3> v{0.3 * dir(rng), 0.3 * dir(rng), 0.3 * dir(rng)};
      double g = 1.0 / std::sqrt(1 - v[0] * v[0] - v[1] * v[1] - v[2] * v[2]);
      double two_pi = 2.0 * std::acos(-1.0);
      OmegaParameter om{{{two_pi * g, two_pi * g * v[0], two_pi * g * v[1], two_pi * g * v[2]}}};
      Decomposition d = at.conjugate_G_by_gamma(om);
      double err = std::abs(d.g_coeff() - 1.0);
      for (int nu = 0; nu <= 3; ++nu)
        err = std::max(err, std::abs(d.p_coeff()[static_cast<std::size_t>(nu)]));
      Decomposition dp = at.conjugate_P_by_gamma(om, 0);
      err = std::max(err, std::abs(dp.p_coeff()[0] - 1.0));
      worst_period = std::max(worst_period, err);
    }
  }
  auto push = [&](const std::string& name, double worst) {
    CheckReport c;
    c.name = name;
    c.status = worst < tol ? CheckStatus::Pass : CheckStatus::Fail;
    c.residual = Residual::of(worst);
    c.details = std::to_string(sweeps) + " seeded draws";
    out.push_back(c);
  };
  push("transform/G-by-gamma-timelike", worst_timelike);
  push("transform/G-by-gamma-spacelike", worst_spacelike);
  push("transform/P-by-gamma", worst_p);
  push("transform/timelike-2pi-period", worst_period);

  // exact nilpotent identities (Eqs. of the G and P conjugations)
  CheckReport nil;
  nil.name = "transform/nilpotency-exact";
  nil.status = at.nilpotency_exact() ? CheckStatus::Pass : CheckStatus::Fail;
  nil.residual = Residual::exact();
  out.push_back(nil);
  return out;
}

std::vector<CheckReport> run_wigner_checks(unsigned seed) {
  std::vector<CheckReport> out;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dir(-1.0, 1.0);
  auto rand_boost = [&] {
    std::array<double, 3> v{0.5 * dir(rng), 0.5 * dir(rng), 0.5 * dir(rng)};
    return boost_matrix(v);
  };
  auto rand_rot = [&] {
    std::array<double, 3> ax{dir(rng), dir(rng), dir(rng)};
    return rotation_matrix(ax, dir(rng) * 3.0);
  };
  auto rand_vel = [&] {
    return FourVelocity::from_velocity({0.4 * dir(rng), 0.4 * dir(rng), 0.4 * dir(rng)});
  };

  double worst_fix = 0, worst_cocycle = 0, worst_unitary = 0;
  for (int t = 0; t < 100; ++t) {
    LorentzMatrix lam1 = rand_boost() * rand_rot();
    LorentzMatrix lam2 = rand_rot() * rand_boost();
    FourVelocity u = rand_vel();
    LorentzMatrix rw = wigner_rotation(lam1, u);
    Eigen::Vector4d std4(1, 0, 0, 0);
    worst_fix = std::max(worst_fix, (rw * std4 - std4).cwiseAbs().maxCoeff());
    // cocycle R_W(L2 L1, u) = R_W(L2, L1 u) R_W(L1, u)
    LorentzMatrix lhs = wigner_rotation(lam2 * lam1, u);
    LorentzMatrix rhs = wigner_rotation(lam2, apply(lam1, u)) * wigner_rotation(lam1, u);
    worst_cocycle = std::max(worst_cocycle, (lhs - rhs).cwiseAbs().maxCoeff());
    // D unitarity at J = 1 and 1/2
    for (int tj : {1, 2}) {
      WignerD d = wigner_D(HalfInt(tj), rw);
      worst_unitary =
          std::max(worst_unitary, (d.matrix.adjoint() * d.matrix -
                                   Eigen::MatrixXcd::Identity(tj + 1, tj + 1))
                                      .cwiseAbs()
                                      .maxCoeff());
    }
  }
  auto push = [&](const std::string& name, double worst, double tol) {
    CheckReport c;
    c.name = name;
    c.status = worst < tol ? CheckStatus::Pass : CheckStatus::Fail;
    c.residual = Residual::of(worst);
    c.details = "100 seeded draws";
    out.push_back(c);
  };
  push("wigner/fixes-standard-vector", worst_fix, 1e-10);
  push("wigner/cocycle", worst_cocycle, 1e-9);
  push("wigner/D-unitary", worst_unitary, 1e-10);

  // double cover: D^(1/2) at 2pi is -I
  WignerD d2pi = wigner_D_angles(HalfInt(1), {2 * std::acos(-1.0), 0, 0});
  double err = (d2pi.matrix + Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff();
  CheckReport c;
  c.name = "wigner/double-cover-2pi";
  c.status = err < 1e-10 ? CheckStatus::Pass : CheckStatus::Fail;
  c.residual = Residual::of(err);
  out.push_back(c);
  return out;
}

std::vector<CheckReport> run_wave_checks(unsigned seed) {
  std::vector<CheckReport> out;
  Representation l1 = lambda1_rep();
  Representation dirac = dirac_rep();
  {
    auto rep = spectrum_invariance(l1, 1.0, seeded_velocities(seed, 20));
    CheckReport c;
    c.name = "wave/spectrum-invariance-lambda1";
    c.status = rep.pass() ? CheckStatus::Pass : CheckStatus::Fail;
    c.residual = Residual::of(rep.max_drift);
    c.details = "20 boosts";
    out.push_back(c);
  }
  {
    auto rep = spectrum_invariance(dirac, 1.0, seeded_velocities(seed + 1, 20));
    CheckReport c;
    c.name = "wave/spectrum-invariance-dirac";
    c.status = rep.pass() ? CheckStatus::Pass : CheckStatus::Fail;
    c.residual = Residual::of(rep.max_drift);
    out.push_back(c);
  }
  {
    // single plane wave: divergence at machine precision
    FourVector p{{2.0, 0, 0, 0}};
    auto sols = plane_wave_solutions(dirac, p, 1.0);
    auto sample = current_divergence(dirac, {sols.front()}, {0.1, 4});
    CheckReport c;
    c.name = "wave/single-mode-current-conserved";
    c.status = sample.max_abs_divergence < 1e-12 ? CheckStatus::Pass : CheckStatus::Fail;
    c.residual = Residual::of(sample.max_abs_divergence);
    out.push_back(c);
  }
  {
    // two modes with different momenta, O(h^2) convergence of the
    // divergence residual (a rest-frame mode paired with a boosted one has
    // an identically vanishing cross current, so boost both)
    FourVector rest{{2.0, 0, 0, 0}};
    FourVector p1 = boost_momentum(rest, {0.5, 0, 0});
    FourVector p2 = boost_momentum(rest, {0, 0.48, 0});
    auto s1 = plane_wave_solutions(dirac, p1, 1.0);
    auto s2 = plane_wave_solutions(dirac, p2, 1.0);
    std::vector<PlaneWaveSolution> modes{s1.front(), s2.front()};
    double h0 = 0.08;
    std::vector<double> hs{h0, h0 / 2, h0 / 4};
    std::vector<double> errs;
    for (double h : hs) errs.push_back(current_divergence(dirac, modes, {h, 4}).max_abs_divergence);
    double slope = std::log(errs[0] / errs[2]) / std::log(hs[0] / hs[2]);
    CheckReport c;
    c.name = "wave/two-mode-divergence-h2";
    bool hermit = current_divergence(dirac, modes, {h0, 4}).pseudo_hermitian;
    c.status = (hermit && std::abs(slope - 2.0) < 0.2) ? CheckStatus::Pass : CheckStatus::Fail;
    c.residual = Residual::of(slope);
    c.details = hermit ? "fitted slope (target 2.0 +- 0.2)"
                       : "pseudo-hermiticity of the representation is broken";
    out.push_back(c);
  }
  return out;
}

int emit_and_exit(std::vector<CheckReport> reports, const RunConfig& cfg) {
  std::cout << emit_report(reports, cfg);
  return report_exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"epalg: exact checks for an extended Poincare algebra"};
  app.require_subcommand(1);
  app.fallthrough();  // parent flags (--seed, --json) may follow the subcommand

  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "seed for randomized sweeps")->capture_default_str();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of a table");

  // check
  auto* check = app.add_subcommand("check", "structure-constant level verification");
  check->require_subcommand(1);
  auto* check_jac = check->add_subcommand("jacobi", "Jacobi identity sweep");
  auto* check_met = check->add_subcommand("metric", "group metric vs reference values");
  auto* check_cas = check->add_subcommand("casimir", "Casimir commutator identities");
  auto* check_coh = check->add_subcommand("cohomology", "central extension H^2 computation");

  // rep
  auto* rep_cmd = app.add_subcommand("rep", "finite-dimensional representations");
  rep_cmd->require_subcommand(1);
  auto* rep_build = rep_cmd->add_subcommand("build", "build and validate a representation");
  std::string lambda_str = "1", source = "paper", out_file;
  rep_build->add_option("--lambda", lambda_str, "0, 1/2, 1, 3/2 or 2")->capture_default_str();
  rep_build->add_option("--source", source, "paper | dirac | synthesize")->capture_default_str();
  rep_build->add_option("--out", out_file, "output JSON file");
  auto* rep_verify = rep_cmd->add_subcommand("verify", "re-validate a representation file");
  std::string in_file;
  rep_verify->add_option("--in", in_file, "representation JSON file")->required();

  // spinor
  auto* spinor = app.add_subcommand("spinor", "spinor-polynomial basis");
  auto* spinor_basis_cmd = spinor->add_subcommand("basis", "emit the Lambda multiplet");
  std::string spinor_lambda = "1";
  std::string spinor_format = "table";
  spinor_basis_cmd->add_option("--lambda", spinor_lambda, "multiplet label")->capture_default_str();
  spinor_basis_cmd->add_option("--format", spinor_format, "json | table")->capture_default_str();

  // wave
  auto* wave = app.add_subcommand("wave", "linear wave equation");
  auto* wave_spec = wave->add_subcommand("spectrum", "slash spectrum under boosts");
  std::string wave_rep_file;
  double wave_mass = 1.0;
  std::vector<double> wave_velocity{0, 0, 0};
  wave_spec->add_option("--rep", wave_rep_file, "representation file (default: dirac)");
  wave_spec->add_option("--mass", wave_mass, "rest mass mu")->capture_default_str();
  wave_spec->add_option("--velocity", wave_velocity, "vx,vy,vz")->delimiter(',')->expected(3);
  auto* wave_cur = wave->add_subcommand("current", "conserved-current divergence samples");
  std::string modes_spec = "0:0,0,0;1:0.3,0,0";
  std::vector<double> grid_spec{0.05, 5};
  wave_cur->add_option("--rep", wave_rep_file, "representation file (default: dirac)");
  wave_cur->add_option("--mass", wave_mass, "rest mass mu")->capture_default_str();
  wave_cur->add_option("--modes", modes_spec,
                       "semicolon-separated modes: eigindex:vx,vy,vz")->capture_default_str();
  wave_cur->add_option("--grid", grid_spec, "h,N")->delimiter(',')->expected(2);

  // transform
  auto* transform = app.add_subcommand("transform", "finite transformation identities");
  auto* tr_gamma = transform->add_subcommand("gamma", "conjugation by exp(i omega.Gamma)");
  std::vector<double> omega_in{1.0, 0, 0, 0};
  std::size_t sweep_n = 0;
  tr_gamma->add_option("--omega", omega_in, "w0,w1,w2,w3")->delimiter(',')->expected(4);
  tr_gamma->add_option("--sweep", sweep_n, "additionally run N random draws");
  auto* tr_g = transform->add_subcommand("g", "conjugation by exp(i alpha G)");
  double alpha_in = 1.0;
  tr_g->add_option("--alpha", alpha_in, "group parameter")->capture_default_str();
  auto* tr_p = transform->add_subcommand("p", "conjugation by exp(i a^beta P_beta)");
  std::vector<double> a_in{0, 1.0, 0, 0};
  tr_p->add_option("--a", a_in, "a0,a1,a2,a3 (upper index)")->delimiter(',')->expected(4);

  // wigner
  auto* wig = app.add_subcommand("wigner", "Wigner rotation and D matrices");
  std::vector<double> wig_boost{0.3, 0, 0}, wig_vel{0, 0.2, 0};
  std::string wig_spin = "1/2";
  wig->add_option("--boost", wig_boost, "bx,by,bz")->delimiter(',')->expected(3);
  wig->add_option("--velocity", wig_vel, "ux,uy,uz state velocity")->delimiter(',')->expected(3);
  wig->add_option("--spin", wig_spin, "J")->capture_default_str();

  auto* algebra_cmd = app.add_subcommand("algebra", "export the structure-constant table");
  std::string algebra_out;
  algebra_cmd->add_option("--out", algebra_out, "output file (default: stdout)");

  auto* all = app.add_subcommand("all", "full verification battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  cfg.format = as_json ? "json" : "table";

  try {
    if (*check_jac) return emit_and_exit(run_jacobi_checks(), cfg);
    if (*check_met) return emit_and_exit(run_metric_checks(), cfg);
    if (*check_cas) return emit_and_exit(run_casimir_checks(), cfg);
    if (*check_coh) return emit_and_exit(run_cohomology_checks(), cfg);

    if (*rep_build) {
      Representation rep = build_rep(source, HalfInt::parse(lambda_str));
      if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) throw std::runtime_error("cannot write " + out_file);
        f << rep_to_json(rep).dump(2) << "\n";
      } else if (as_json) {
        std::cout << rep_to_json(rep).dump(2) << "\n";
      }
      return emit_and_exit(validation_to_reports(rep, "rep/" + rep.name), cfg);
    }
    if (*rep_verify) {
      std::ifstream f(in_file);
      if (!f) throw std::runtime_error("cannot read " + in_file);
      json j;
      f >> j;
      Representation rep = rep_from_json(j);
      rep.validation = validate_rep(rep);
      return emit_and_exit(validation_to_reports(rep, "rep/verify"), cfg);
    }

    if (*spinor_basis_cmd) {
      HalfInt lam = HalfInt::parse(spinor_lambda);
      auto labels = multiplet_labels(lam);
      auto states = multiplet_states(lam);
      if (spinor_format == "json" || as_json) {
        json out = json::array();
        for (std::size_t i = 0; i < labels.size(); ++i) {
          json entry;
          entry["label"] = label_to_json(labels[i]);
          entry["source"] =
              states[i].source == SpinorPoly::Source::Formula ? "formula" : "ladder";
          entry["prefactor_sq"] = to_string(states[i].prefactor_sq);
          json terms = json::array();
          for (const auto& [m, c] : states[i].terms)
            terms.push_back(json{{"exponents", m}, {"coeff", scalar_to_json(c)}});
          entry["terms"] = std::move(terms);
          json eig;
          eig["J2"] = to_string(apply_ladder(LadderOp::J2, labels[i]).coeff.rat);
          eig["Jz"] = to_string(apply_ladder(LadderOp::Jz, labels[i]).coeff.rat);
          eig["Gamma0"] = to_string(apply_ladder(LadderOp::Gamma0, labels[i]).coeff.rat);
          eig["Casimir"] = to_string(apply_ladder(LadderOp::Casimir, labels[i]).coeff.rat);
          entry["eigenvalues"] = std::move(eig);
          entry["metric"] = spinor_metric(labels[i]).to_string();
          out.push_back(std::move(entry));
        }
        std::cout << out.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < labels.size(); ++i) {
          std::cout << labels[i].to_string() << "  source="
                    << (states[i].source == SpinorPoly::Source::Formula ? "formula" : "ladder")
                    << "  prefactor_sq=" << to_string(states[i].prefactor_sq)
                    << "  metric=" << spinor_metric(labels[i]).to_string() << "\n";
          for (const auto& [m, c] : states[i].terms)
            std::cout << "    chi^(" << m[0] << "," << m[1] << "," << m[2] << "," << m[3]
                      << ") : " << c.to_string() << "\n";
        }
      }
      return 0;
    }

    if (*wave_spec || *wave_cur) {
      Representation rep = wave_rep_file.empty() ? dirac_rep() : [&] {
        std::ifstream f(wave_rep_file);
        if (!f) throw std::runtime_error("cannot read " + wave_rep_file);
        json j;
        f >> j;
        return rep_from_json(j);
      }();
      if (*wave_spec) {
        FourVector rest{{wave_mass, 0, 0, 0}};
        FourVector p = boost_momentum(rest, {wave_velocity[0], wave_velocity[1], wave_velocity[2]});
        auto clusters = eig_spectrum(slash(rep, p));
        if (as_json) {
          json out;
          out["momentum"] = {p[0], p[1], p[2], p[3]};
          json sp = json::array();
          for (const auto& c : clusters)
            sp.push_back(json{{"value", format_float(c.value.real())},
                              {"imag", format_float(c.value.imag())},
                              {"multiplicity", c.multiplicity}});
          out["spectrum"] = std::move(sp);
          std::cout << out.dump(2) << "\n";
        } else {
          std::cout << "slash spectrum at p = (" << p[0] << ", " << p[1] << ", " << p[2] << ", "
                    << p[3] << "):\n";
          for (const auto& c : clusters)
            std::cout << "  " << format_float(c.value.real()) << " x" << c.multiplicity << "\n";
        }
        return 0;
      }
      // wave current
      FourVector rest{{wave_mass, 0, 0, 0}};
      std::vector<PlaneWaveSolution> modes;
      std::string spec_norm = modes_spec;
      std::replace(spec_norm.begin(), spec_norm.end(), '+', ';');  // ';' or '+' separate modes
      std::stringstream ss(spec_norm);
      std::string tok;
      while (std::getline(ss, tok, ';')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw std::runtime_error("bad --modes entry: " + tok);
        std::size_t eigindex = std::stoul(tok.substr(0, colon));
        std::array<double, 3> v{};
        std::stringstream vs(tok.substr(colon + 1));
        std::string num;
        for (int k = 0; k < 3 && std::getline(vs, num, ','); ++k)
          v[static_cast<std::size_t>(k)] = std::stod(num);
        FourVector p = boost_momentum(rest, v);
        // target eigenvalue: gamma * mu from the rest-frame spectrum order
        auto rest_clusters = eig_spectrum(slash(rep, rest));
        if (eigindex >= rest_clusters.size())
          throw std::runtime_error("mode eigindex out of range");
        double target = rest_clusters[eigindex].value.real();
        auto sols = plane_wave_solutions(rep, p, target);
        if (sols.empty()) throw std::runtime_error("no solution at requested eigenvalue");
        modes.push_back(sols.front());
      }
      GridSpec grid{grid_spec[0], static_cast<int>(grid_spec[1])};
      CurrentSample sample = current_divergence(rep, modes, grid);
      // CSV: x0..x3 of each interior point and div_j
      std::cout << "x0,x1,x2,x3,div_j\n";
      std::size_t idx = 0;
      const int n = grid.n;
      for (int i0 = 1; i0 + 1 < n; ++i0)
        for (int i1 = 1; i1 + 1 < n; ++i1)
          for (int i2 = 1; i2 + 1 < n; ++i2)
            for (int i3 = 1; i3 + 1 < n; ++i3) {
              std::cout << format_float(i0 * grid.h) << "," << format_float(i1 * grid.h) << ","
                        << format_float(i2 * grid.h) << "," << format_float(i3 * grid.h) << ","
                        << format_float(sample.divergence[idx++]) << "\n";
            }
      std::cerr << "max |div j| = " << format_float(sample.max_abs_divergence)
                << (sample.pseudo_hermitian
                        ? ""
                        : "  [warning: representation is not pseudo-hermitian wrt its metric;"
                          " analytic conservation does not hold]")
                << "\n";
      return 0;
    }

    if (*tr_gamma) {
      std::vector<CheckReport> reports;
      AdjointTransforms at;
      OmegaParameter om{{{omega_in[0], omega_in[1], omega_in[2], omega_in[3]}}};
      std::string cls = om.cls() == OmegaClass::Timelike
                            ? "timelike"
                            : (om.cls() == OmegaClass::Spacelike ? "spacelike" : "null-extension");
      reports.push_back(gamma_transform_check(at, om, "transform/gamma-omega-" + cls, 1e-10));
      reports.push_back(p_transform_check(at, om, 0, "transform/p-omega-" + cls, 1e-10));
      if (sweep_n > 0) {
        auto sweep = run_transform_sweep(cfg.seed, sweep_n, 1e-10);
        reports.insert(reports.end(), sweep.begin(), sweep.end());
      }
      return emit_and_exit(reports, cfg);
    }
    if (*tr_g) {
      AdjointTransforms at;
      std::vector<CheckReport> reports;
      for (int mu = 0; mu <= 3; ++mu) {
        Decomposition d = at.conjugate_gamma_by_G(alpha_in, mu);
        // expect Gamma^mu + alpha eta^{mu nu} P_nu
        double err = 0;
        for (int a = 0; a < kNumGen; ++a) {
          double expect = 0;
          if (a == index_of(gamma_mu(mu))) expect = 1;
          if (a == index_of(momentum_mu(mu)))
            expect = alpha_in * kEta[static_cast<std::size_t>(mu)];
          err = std::max(err, std::abs(d.coeff[static_cast<std::size_t>(a)] - expect));
        }
        CheckReport c;
        c.name = "transform/gamma" + std::to_string(mu) + "-by-G";
        c.status = err < 1e-10 ? CheckStatus::Pass : CheckStatus::Fail;
        c.residual = Residual::of(err);
        c.details = "expected Gamma + alpha eta P";
        reports.push_back(c);
      }
      return emit_and_exit(reports, cfg);
    }
    if (*tr_p) {
      AdjointTransforms at;
      std::vector<CheckReport> reports;
      std::array<double, 4> a_upper{a_in[0], a_in[1], a_in[2], a_in[3]};
      for (int mu = 0; mu <= 3; ++mu) {
        Decomposition d = at.conjugate_gamma_by_P(a_upper, mu);
        double err = 0;
        for (int a = 0; a < kNumGen; ++a) {
          double expect = 0;
          if (a == index_of(gamma_mu(mu))) expect = 1;
          if (a == index_of(Gen::G)) expect = a_upper[static_cast<std::size_t>(mu)];
          err = std::max(err, std::abs(d.coeff[static_cast<std::size_t>(a)] - expect));
        }
        CheckReport c;
        c.name = "transform/gamma" + std::to_string(mu) + "-by-P";
        c.status = err < 1e-10 ? CheckStatus::Pass : CheckStatus::Fail;
        c.residual = Residual::of(err);
        c.details = "expected Gamma + a^mu G";
        reports.push_back(c);
      }
      return emit_and_exit(reports, cfg);
    }

    if (*wig) {
      LorentzMatrix lam = boost_matrix({wig_boost[0], wig_boost[1], wig_boost[2]});
      FourVelocity u = FourVelocity::from_velocity({wig_vel[0], wig_vel[1], wig_vel[2]});
      LorentzMatrix rw = wigner_rotation(lam, u);
      EulerZYZ e = euler_zyz(rw);
      WignerD d = wigner_D(HalfInt::parse(wig_spin), rw);
      if (as_json) {
        json out;
        json rwj = json::array();
        for (int r = 0; r < 4; ++r) {
          json row = json::array();
          for (int c = 0; c < 4; ++c) row.push_back(format_float(rw(r, c)));
          rwj.push_back(row);
        }
        out["wigner_rotation"] = std::move(rwj);
        out["euler_zyz"] = {format_float(e.alpha), format_float(e.beta), format_float(e.gamma)};
        json dj = json::array();
        for (Eigen::Index r = 0; r < d.matrix.rows(); ++r) {
          json row = json::array();
          for (Eigen::Index c = 0; c < d.matrix.cols(); ++c)
            row.push_back(json{{"re", format_float(d.matrix(r, c).real())},
                               {"im", format_float(d.matrix(r, c).imag())}});
          dj.push_back(row);
        }
        out["D"] = std::move(dj);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "R_W =\n" << rw << "\neuler zyz = (" << e.alpha << ", " << e.beta << ", "
                  << e.gamma << ")\nD^(" << wig_spin << ") =\n" << d.matrix << "\n";
      }
      return 0;
    }

    if (*algebra_cmd) {
      json j = algebra_to_json(build_algebra());
      if (algebra_out.empty()) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::ofstream f(algebra_out);
        if (!f) throw std::runtime_error("cannot write " + algebra_out);
        f << j.dump(2) << "\n";
      }
      return 0;
    }

    if (*all) {
      std::vector<CheckReport> reports;
      auto append = [&](std::vector<CheckReport> v) {
        reports.insert(reports.end(), v.begin(), v.end());
      };
      append(run_jacobi_checks());
      append(run_metric_checks());
      append(run_casimir_checks());
      append(run_cohomology_checks());
      append(validation_to_reports(lambda1_rep(), "rep/lambda1"));
      append(validation_to_reports(dirac_rep(), "rep/dirac"));
      append(validation_to_reports(synthesize_rep(HalfInt::from_int(1)), "rep/synthesize-1"));
      append(run_wave_checks(cfg.seed));
      append(run_transform_sweep(cfg.seed, 100, 1e-10));
      append(run_wigner_checks(cfg.seed));
      return emit_and_exit(reports, cfg);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  std::cerr << "no subcommand selected\n";
  return 1;
}
