#pragma once

#include <cstddef>
#include <vector>

#include "epalg/structure_constants.hpp"

namespace epalg {

/// A 2-cocycle representative surviving modulo coboundaries, as sparse
/// coefficients on generator pairs (a < b).
struct CocycleWitness {
  std::vector<std::pair<std::pair<Gen, Gen>, Rational>> entries;
};

struct CentralExtensionReport {
  std::size_t dim_h2 = 0;
  std::size_t rank_d1 = 0;        // C^1 -> C^2 differential
  std::size_t rank_d2 = 0;        // C^2 -> C^3 differential
  std::size_t dim_c2 = 0;         // = C(n,2)
  std::vector<CocycleWitness> witness_basis;
};

/// dim H^2(g; R) with trivial real coefficients, by exact ranks of the
/// Chevalley-Eilenberg differentials d1: C^1 -> C^2 and d2: C^2 -> C^3.
/// dim H^2 = dim ker d2 - rank d1. Zero means every admissible local-factor
/// assignment on the bracket table is removable by generator redefinition.
CentralExtensionReport check_central_extensions(const StructureConstants& sc, int num_gen = kNumGen);

/// The degree-2 -> degree-3 differential as an exact matrix (rows = triples,
/// cols = pairs); exposed for rank self-consistency oracles.
ExactMatrix cohomology_d2_matrix(const StructureConstants& sc, int num_gen = kNumGen);

}  // namespace epalg
