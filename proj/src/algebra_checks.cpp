#include "epalg/algebra_checks.hpp"

#include <future>
#include <map>
#include <thread>

namespace epalg {

namespace {

int thread_budget() {
  if (const char* env = std::getenv("EPALG_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

JacobiReport check_jacobi(const StructureConstants& sc, int num_gen) {
  // enumerate unordered triples a < b < c
  std::vector<std::array<Gen, 3>> triples;
  for (int a = 0; a < num_gen; ++a)
    for (int b = a + 1; b < num_gen; ++b)
      for (int c = b + 1; c < num_gen; ++c)
        triples.push_back({gen_at(a), gen_at(b), gen_at(c)});

  auto check_one = [&sc](const std::array<Gen, 3>& t) -> std::vector<BracketTerm> {
    // sum over cyclic (x,y,z): f_xy^d f_dz^e, accumulated per e
    std::map<int, Rational> acc;
    const std::array<std::array<Gen, 3>, 3> cyc = {{{t[0], t[1], t[2]},
                                                    {t[1], t[2], t[0]},
                                                    {t[2], t[0], t[1]}}};
    for (const auto& [x, y, z] : cyc) {
      for (const auto& inner : sc.bracket(x, y)) {
        for (const auto& outer : sc.bracket(inner.c, z)) {
          acc[index_of(outer.c)] += inner.f * outer.f;
        }
      }
    }
    std::vector<BracketTerm> residual;
    for (const auto& [e, v] : acc)
      if (v != 0) residual.push_back({gen_at(e), v});
    return residual;
  };

  JacobiReport report;
  report.triples_checked = triples.size();
  const int nthreads = std::min<int>(thread_budget(), 8);
  if (nthreads <= 1 || triples.size() < 64) {
    for (const auto& t : triples) {
      auto res = check_one(t);
      if (!res.empty()) report.failures.push_back({t, std::move(res)});
    }
    return report;
  }
  // parallel sweep with deterministic merge by triple index
  std::vector<std::future<std::vector<JacobiFailure>>> futs;
  const std::size_t chunk = (triples.size() + static_cast<std::size_t>(nthreads) - 1) /
                            static_cast<std::size_t>(nthreads);
  for (int w = 0; w < nthreads; ++w) {
    std::size_t lo = static_cast<std::size_t>(w) * chunk;
    std::size_t hi = std::min(triples.size(), lo + chunk);
    if (lo >= hi) break;
    futs.push_back(std::async(std::launch::async, [&, lo, hi]() {
      std::vector<JacobiFailure> fails;
      for (std::size_t i = lo; i < hi; ++i) {
        auto res = check_one(triples[i]);
        if (!res.empty()) fails.push_back({triples[i], std::move(res)});
      }
      return fails;
    }));
  }
  for (auto& f : futs) {
    auto fails = f.get();
    report.failures.insert(report.failures.end(), fails.begin(), fails.end());
  }
  return report;
}

Representation adjoint_rep(const StructureConstants& sc) {
  auto jac = check_jacobi(sc);
  if (!jac.clean())
    throw JacobiViolation("refusing to build adjoint of a table with " +
                          std::to_string(jac.failures.size()) + " Jacobi failures");
  Representation rep;
  rep.dim = kNumGen;
  rep.name = "adjoint";
  const ExactScalar iunit = ExactScalar::i();
  for (int a = 0; a < kNumGen; ++a) {
    ExactMatrix m(kNumGen, kNumGen);
    for (int b = 0; b < kNumGen; ++b)
      for (const auto& t : sc.bracket(gen_at(a), gen_at(b)))
        m.at(static_cast<std::size_t>(index_of(t.c)), static_cast<std::size_t>(b)) =
            iunit * ExactScalar(t.f);
    rep.mats.emplace(gen_at(a), std::move(m));
  }
  // bracket faithfulness: [ad_a, ad_b] = i f_ab^c ad_c, all 105 pairs
  for (int a = 0; a < kNumGen; ++a) {
    for (int b = a + 1; b < kNumGen; ++b) {
      ExactMatrix lhs = commutator(rep.mat(gen_at(a)), rep.mat(gen_at(b)));
      ExactMatrix rhs(kNumGen, kNumGen);
      for (const auto& t : sc.bracket(gen_at(a), gen_at(b)))
        rhs = rhs + rep.mat(t.c).scaled(iunit * ExactScalar(t.f));
      if (lhs != rhs)
        throw JacobiViolation(std::string("adjoint bracket mismatch for [") +
                              name_of(gen_at(a)) + "," + name_of(gen_at(b)) + "]");
    }
  }
  rep.metric = ExactMatrix::identity(kNumGen);  // placeholder; adjoint has no spinor metric
  return rep;
}

ExactMatrix group_metric(const StructureConstants& sc, int num_gen) {
  const std::size_t n = static_cast<std::size_t>(num_gen);
  ExactMatrix eta(n, n);
  for (int a = 0; a < num_gen; ++a) {
    for (int b = a; b < num_gen; ++b) {
      Rational s(0);
      for (int c = 0; c < num_gen; ++c)
        for (const auto& t : sc.bracket(gen_at(a), gen_at(c)))  // f_ac^d
          s += t.f * sc.coefficient(gen_at(b), t.c, gen_at(c)); // f_bd^c
      eta.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = ExactScalar(s);
      eta.at(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = ExactScalar(s);
    }
  }
  return eta;
}

void QuadraticElement::set(Gen a, Gen b, Rational c) {
  int ia = index_of(a), ib = index_of(b);
  auto key = std::make_pair(std::min(ia, ib), std::max(ia, ib));
  if (c == 0)
    coeffs_.erase(key);
  else
    coeffs_[key] = std::move(c);
}

Rational QuadraticElement::coefficient(Gen a, Gen b) const {
  int ia = index_of(a), ib = index_of(b);
  auto it = coeffs_.find({std::min(ia, ib), std::max(ia, ib)});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

ExactMatrix QuadraticElement::evaluate(const Representation& rep) const {
  ExactMatrix sum = ExactMatrix::zero(rep.dim, rep.dim);
  for (const auto& [key, c] : coeffs_) {
    ExactMatrix a = rep.mat_or_zero(gen_at(key.first));
    ExactMatrix b = rep.mat_or_zero(gen_at(key.second));
    ExactMatrix prod = (key.first == key.second) ? a * b : (a * b + b * a);
    sum = sum + prod.scaled(ExactScalar(c));
  }
  return sum;
}

QuadraticElement casimir_element(CasimirKind which) {
  QuadraticElement q;
  if (which == CasimirKind::Lorentz) {
    for (int k = 1; k <= 3; ++k) {
      q.set(rotation(k), rotation(k), Rational(1));
      q.set(boost(k), boost(k), Rational(-1));
      q.set(gamma_mu(k), gamma_mu(k), Rational(-1));
    }
    q.set(Gen::Gam0, Gen::Gam0, Rational(1));
  } else {
    q.set(Gen::G, Gen::G, Rational(1));
    for (int mu = 0; mu <= 3; ++mu)
      q.set(momentum_mu(mu), momentum_mu(mu), Rational(-kEta[static_cast<std::size_t>(mu)]));
  }
  return q;
}

namespace {

ExactMatrix anticomm(const ExactMatrix& a, const ExactMatrix& b) { return a * b + b * a; }

CasimirCheck exact_zero_check(const std::string& name, const ExactMatrix& residual,
                              const std::string& detail = "") {
  CasimirCheck c;
  c.name = name;
  c.pass = residual.is_zero();
  c.detail = c.pass ? detail : "nonzero residual";
  return c;
}

}  // namespace

CasimirReport check_casimir_commutators(const Representation& rep) {
  CasimirReport report;
  const ExactScalar iu = ExactScalar::i();
  const ExactMatrix clam = casimir_element(CasimirKind::Lorentz).evaluate(rep);
  const ExactMatrix cmu = casimir_element(CasimirKind::Poincare).evaluate(rep);
  const ExactMatrix G = rep.mat_or_zero(Gen::G);
  std::array<ExactMatrix, 4> P, Gam;
  for (int mu = 0; mu <= 3; ++mu) {
    P[static_cast<std::size_t>(mu)] = rep.mat_or_zero(momentum_mu(mu));
    Gam[static_cast<std::size_t>(mu)] = rep.mat_or_zero(gamma_mu(mu));
  }

  {  // [G, C_Lambda] = i (Gam^mu P_mu + P_mu Gam^mu)
    ExactMatrix rhs(rep.dim, rep.dim);
    for (std::size_t mu = 0; mu < 4; ++mu) rhs = rhs + anticomm(Gam[mu], P[mu]);
    report.checks.push_back(
        exact_zero_check("[G,C_Lambda] = i(Gam.P + P.Gam)", commutator(G, clam) - rhs.scaled(iu)));
  }
  {  // [P_0, C_Lambda] = -i (Gam0 G + G Gam0 + sum_j (K_j P_j + P_j K_j))
    ExactMatrix rhs = anticomm(Gam[0], G);
    for (int j = 1; j <= 3; ++j)
      rhs = rhs + anticomm(rep.mat_or_zero(boost(j)), P[static_cast<std::size_t>(j)]);
    report.checks.push_back(exact_zero_check(
        "[P0,C_Lambda] = -i(Gam0 G + G Gam0 + sum K.P)",
        commutator(P[0], clam) + rhs.scaled(iu),
        "holds with +sum(K_j P_j + P_j K_j); the displayed minus sign does not close"));
  }
  for (int j = 1; j <= 3; ++j) {
    // [P_j, C_Lambda] = i (Gam^j G + G Gam^j - K_j P0 - P0 K_j + eps (J_k P_m + P_m J_k))
    ExactMatrix rhs = anticomm(Gam[static_cast<std::size_t>(j)], G) -
                      anticomm(rep.mat_or_zero(boost(j)), P[0]);
    for (int k = 1; k <= 3; ++k)
      for (int m = 1; m <= 3; ++m) {
        int e = epsilon(j, k, m);
        if (e != 0)
          rhs = rhs + anticomm(rep.mat_or_zero(rotation(k)), P[static_cast<std::size_t>(m)])
                          .scaled(ExactScalar::from_int(e));
      }
    report.checks.push_back(exact_zero_check(
        "[P" + std::to_string(j) + ",C_Lambda] identity",
        commutator(P[static_cast<std::size_t>(j)], clam) - rhs.scaled(iu),
        "index on the Gam G term is j, matching the bracket component"));
  }
  for (int x = 0; x < kNumLorentzGen; ++x)
    report.checks.push_back(exact_zero_check(
        std::string("[C_Lambda,") + name_of(gen_at(x)) + "] = 0",
        commutator(clam, rep.mat_or_zero(gen_at(x)))));
  for (int x = 0; x < kNumGen; ++x)
    report.checks.push_back(exact_zero_check(std::string("[C_mu,") + name_of(gen_at(x)) + "] = 0",
                                             commutator(cmu, rep.mat_or_zero(gen_at(x)))));
  return report;
}

}  // namespace epalg
