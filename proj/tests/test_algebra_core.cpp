#include <doctest.h>

#include <random>

#include "epalg/algebra_checks.hpp"
#include "epalg/cohomology.hpp"
#include "epalg/rep_json.hpp"

using namespace epalg;

TEST_CASE("bracket table reproduces the defining relations") {
  StructureConstants sc = build_algebra();

  // [J1,J2] = i J3
  auto b = sc.bracket(Gen::J1, Gen::J2);
  REQUIRE(b.size() == 1);
  CHECK(b[0].c == Gen::J3);
  CHECK(b[0].f == 1);

  // [Gam0,Gam3] = i K3
  CHECK(sc.coefficient(Gen::Gam0, Gen::Gam3, Gen::K3) == 1);
  // [Gam2,P2] = i G
  CHECK(sc.coefficient(Gen::Gam2, Gen::P2, Gen::G) == 1);
  // [Gam0,G] = i eta^{00} P0 = -i P0
  CHECK(sc.coefficient(Gen::Gam0, Gen::G, Gen::P0) == -1);
  // [K1,P1] = -i P0
  CHECK(sc.coefficient(Gen::K1, Gen::P1, Gen::P0) == -1);
  // antisymmetry
  CHECK(sc.coefficient(Gen::J2, Gen::J1, Gen::J3) == -1);
  // nothing else: [Gam0, J2] = 0, [P1, P2] = 0, [J1, G] = 0
  CHECK(sc.bracket(Gen::Gam0, Gen::J2).empty());
  CHECK(sc.bracket(Gen::P1, Gen::P2).empty());
  CHECK(sc.bracket(Gen::J1, Gen::G).empty());
}

TEST_CASE("jacobi sweep: full algebra clean, su2 clean, broken table localized") {
  StructureConstants sc = build_algebra();
  JacobiReport r = check_jacobi(sc);
  CHECK(r.triples_checked == 455);
  CHECK(r.failures.empty());

  CHECK(check_jacobi(build_su2(), 3).failures.empty());

  StructureConstants broken = build_algebra();
  for (int mu = 0; mu <= 3; ++mu) broken.erase_bracket(gamma_mu(mu), momentum_mu(mu));
  JacobiReport rb = check_jacobi(broken);
  CHECK(!rb.failures.empty());
  bool found = false;
  for (const auto& f : rb.failures) {
    // the source's own counterexample: (P_j, Gam0, Gam^j)
    if (f.triple == std::array<Gen, 3>{Gen::Gam0, Gen::Gam1, Gen::P1}) found = true;
  }
  CHECK(found);
}

TEST_CASE("adjoint representation is bracket-faithful and refuses broken tables") {
  StructureConstants sc = build_algebra();
  Representation ad = adjoint_rep(sc);  // internal faithfulness assertion
  CHECK(ad.dim == 15);

  // ad(J3) on the (J1,J2) block: rotation-generator form, f-values +-1
  // carried with the convention's i: f_{J3,J1}^{J2} = +1, f_{J3,J2}^{J1} = -1
  const ExactMatrix& j3 = ad.mat(Gen::J3);
  CHECK(j3.at(1, 0) == ExactScalar::i());
  CHECK(j3.at(0, 1) == -ExactScalar::i());

  // [ad(Gam0), ad(Gam3)] = i ad(K3)
  CHECK(commutator(ad.mat(Gen::Gam0), ad.mat(Gen::Gam3)) ==
        ad.mat(Gen::K3).scaled(ExactScalar::i()));

  // nilpotency: ad(P0)^2 applied to the ad-image of Gam0 vanishes
  ExactMatrix p0 = ad.mat(Gen::P0);
  CHECK(commutator(p0, commutator(p0, ad.mat(Gen::Gam0))).is_zero());

  StructureConstants broken = build_algebra();
  for (int mu = 0; mu <= 3; ++mu) broken.erase_bracket(gamma_mu(mu), momentum_mu(mu));
  CHECK_THROWS_AS(adjoint_rep(broken), JacobiViolation);
}

TEST_CASE("group metric matches the reference table exactly") {
  ExactMatrix eta = group_metric(build_algebra());
  auto entry = [&](Gen a, Gen b) {
    return eta.at(static_cast<std::size_t>(index_of(a)), static_cast<std::size_t>(index_of(b)));
  };
  for (int k = 1; k <= 3; ++k) {
    CHECK(entry(rotation(k), rotation(k)) == ExactScalar::from_int(-8));
    CHECK(entry(boost(k), boost(k)) == ExactScalar::from_int(8));
    CHECK(entry(gamma_mu(k), gamma_mu(k)) == ExactScalar::from_int(8));
  }
  CHECK(entry(Gen::Gam0, Gen::Gam0) == ExactScalar::from_int(-8));
  // P/G rows and columns vanish; off-diagonals vanish
  for (int a = 0; a < kNumGen; ++a)
    for (int b = 0; b < kNumGen; ++b) {
      if (a == b && a < kNumLorentzGen) continue;
      CHECK(eta.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)).is_zero());
    }
}

TEST_CASE("group metric values move with a generator permutation") {
  StructureConstants sc = build_algebra();
  auto swap_gen = [](Gen g) {
    if (g == Gen::J1) return Gen::K1;
    if (g == Gen::K1) return Gen::J1;
    return g;
  };
  StructureConstants relabeled;
  for (int a = 0; a < kNumGen; ++a)
    for (int b = a + 1; b < kNumGen; ++b)
      for (const auto& t : sc.bracket(gen_at(a), gen_at(b)))
        relabeled.add(swap_gen(gen_at(a)), swap_gen(gen_at(b)), swap_gen(t.c), t.f);
  ExactMatrix eta = group_metric(sc);
  ExactMatrix eta2 = group_metric(relabeled);
  for (int a = 0; a < kNumGen; ++a)
    for (int b = 0; b < kNumGen; ++b)
      CHECK(eta2.at(static_cast<std::size_t>(index_of(swap_gen(gen_at(a)))),
                    static_cast<std::size_t>(index_of(swap_gen(gen_at(b))))) ==
            eta.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)));
}

TEST_CASE("casimir elements have the stated coefficients") {
  QuadraticElement lorentz = casimir_element(CasimirKind::Lorentz);
  CHECK(lorentz.coefficient(Gen::J1, Gen::J1) == 1);
  CHECK(lorentz.coefficient(Gen::K2, Gen::K2) == -1);
  CHECK(lorentz.coefficient(Gen::Gam0, Gen::Gam0) == 1);
  CHECK(lorentz.coefficient(Gen::Gam3, Gen::Gam3) == -1);
  CHECK(lorentz.coefficient(Gen::P0, Gen::P0) == 0);

  QuadraticElement poincare = casimir_element(CasimirKind::Poincare);
  CHECK(poincare.coefficient(Gen::G, Gen::G) == 1);
  CHECK(poincare.coefficient(Gen::P0, Gen::P0) == 1);   // -eta^{00}
  CHECK(poincare.coefficient(Gen::P2, Gen::P2) == -1);  // -eta^{22}
  CHECK(poincare.coefficient(Gen::J1, Gen::J1) == 0);
}

TEST_CASE("casimir commutator identities hold exactly in the adjoint") {
  Representation ad = adjoint_rep(build_algebra());
  CasimirReport r = check_casimir_commutators(ad);
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.pass);
  }
  CHECK(r.all_pass());
}

TEST_CASE("central extensions: H^2 ranks") {
  auto full = check_central_extensions(build_algebra());
  CHECK(full.dim_h2 == 0);
  CHECK(full.rank_d1 == 15);
  CHECK(full.rank_d2 == 90);
  CHECK(full.dim_c2 == 105);
  CHECK(full.witness_basis.empty());

  auto su2 = check_central_extensions(build_su2(), 3);
  CHECK(su2.dim_h2 == 0);
  CHECK(su2.rank_d1 == 3);

  auto ab2 = check_central_extensions(StructureConstants{}, 2);
  CHECK(ab2.dim_h2 == 1);
  REQUIRE(ab2.witness_basis.size() == 1);
  REQUIRE(ab2.witness_basis[0].entries.size() == 1);
  CHECK(ab2.witness_basis[0].entries[0].first.first == Gen::J1);
  CHECK(ab2.witness_basis[0].entries[0].first.second == Gen::J2);
}

TEST_CASE("cohomology d2 rank is pivot-order independent") {
  ExactMatrix d2 = cohomology_d2_matrix(build_algebra());
  CHECK(d2.rows() == 455);
  CHECK(d2.cols() == 105);
  std::size_t r1 = d2.rank(PivotOrder::FirstNonzero);
  std::size_t r2 = d2.rank(PivotOrder::LastNonzero);
  CHECK(r1 == 90);
  CHECK(r1 == r2);
}

TEST_CASE("algebra.json export round-trips the bracket content") {
  StructureConstants sc = build_algebra();
  nlohmann::json j = algebra_to_json(sc);
  CHECK(j.at("generators").size() == 15);
  CHECK(j.at("generators").at(0) == "J1");
  StructureConstants back;
  for (const auto& entry : j.at("brackets")) {
    Gen a = *gen_from_name(entry.at("a").get<std::string>());
    Gen b = *gen_from_name(entry.at("b").get<std::string>());
    for (const auto& t : entry.at("terms"))
      back.add(a, b, *gen_from_name(t.at("c").get<std::string>()),
               parse_rational(t.at("f").get<std::string>()));
  }
  for (int a = 0; a < kNumGen; ++a)
    for (int b = a + 1; b < kNumGen; ++b)
      for (int c = 0; c < kNumGen; ++c)
        CHECK(back.coefficient(gen_at(a), gen_at(b), gen_at(c)) ==
              sc.coefficient(gen_at(a), gen_at(b), gen_at(c)));
}
