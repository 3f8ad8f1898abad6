#pragma once

#include <optional>

#include "epalg/representation.hpp"
#include "epalg/structure_constants.hpp"

namespace epalg {

struct NoClosure : std::runtime_error {
  explicit NoClosure(const std::string& what) : std::runtime_error(what) {}
};

struct SynthesisFailure : std::runtime_error {
  explicit SynthesisFailure(const std::string& what) : std::runtime_error(what) {}
};

/// The v-vectors and 3x3 J-blocks of the source's Lambda=1 display, exactly
/// as printed (including the sqrt2/2 factors). Treated as data under test.
struct BlockData {
  std::array<ExactMatrix, 3> v;  // v_x, v_y, v_z as 3x1 columns
  std::array<ExactMatrix, 3> J;  // J_x, J_y, J_z
};
BlockData paper_block_data();

/// The 10-dim generator matrices assembled from the printed block formulas,
/// before any amendment.
std::map<Gen, ExactMatrix> paper_printed_matrices();

/// Basis labels of the Lambda=1 display: J=0 singlet, then gamma = +1, 0,
/// -1 triplets with M descending.
std::vector<SpinorLabel> lambda1_paper_basis();

/// The printed metric g = diag(-1, I3, -I3, I3).
ExactMatrix lambda1_paper_metric();

/// The paper's 10-dim Lambda=1 representation. Assembled from the printed
/// blocks; every entry that must change for exact closure is amended and
/// listed in the manifest with its printed value. Validation report attached.
Representation lambda1_rep();

/// Dirac-derived Lambda=1/2 representation: J_k spin rotations, Gamma^mu =
/// s gamma^mu with the scalar s solved from closure (s^2 = 1/4), K_k =
/// -i[Gamma0, Gamma^k]. Throws NoClosure if no scalar closes the algebra.
Representation dirac_rep();

/// General Lambda-multiplet representation, Lambda in {0, 1/2, 1, 3/2, 2}:
/// generators act on the degree-2Lambda polynomials in the four spinor
/// variables (each variable transforming as the Dirac representation) and
/// are conjugated into the spinor-label basis built by multiplet_states.
/// Exact; passes full closure validation. Throws SynthesisFailure if any
/// closure constraint fails.
Representation synthesize_rep(HalfInt Lambda);

/// Representation-level validation: the 45 J/K/Gamma bracket pairs exactly,
/// C_Lambda = 2 Lambda (Lambda+2) I, Gamma0 spectrum, metric sign pattern,
/// Delta_J ladder cross-consistency, pseudo-hermiticity (reported, not
/// gated).
ValidationReport validate_rep(const Representation& rep);

/// Exact similarity S with mat_a(g) S = S mat_b(g) for every shared
/// generator, normalized to S[0][pivot] = 1. Returns nullopt when the
/// intertwiner space is trivial or contains no invertible element.
std::optional<ExactMatrix> find_similarity(const Representation& a, const Representation& b);

}  // namespace epalg
