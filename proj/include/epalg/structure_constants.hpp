#pragma once

#include <map>
#include <utility>
#include <vector>

#include "epalg/exact_matrix.hpp"
#include "epalg/generators.hpp"
#include "epalg/rational.hpp"

namespace epalg {

/// One c-component of a bracket: [X_a, X_b] ∋ i * f * X_c.
struct BracketTerm {
  Gen c;
  Rational f;
};

/// Structure constants under the convention [X_a, X_b] = i f_ab^c X_c with
/// all f real rational. Storage holds a < b; the (b,a) entry is synthesized
/// by antisymmetry.
class StructureConstants {
 public:
  /// Adds f_ab^c += f (and the antisymmetric partner). Requires a != b.
  void add(Gen a, Gen b, Gen c, Rational f);

  /// Full bracket [X_a, X_b] as a list of (c, f) terms, antisymmetry applied.
  std::vector<BracketTerm> bracket(Gen a, Gen b) const;

  /// f_ab^c for a single target generator.
  Rational coefficient(Gen a, Gen b, Gen c) const;

  /// Removes every term of the bracket (a,b).
  void erase_bracket(Gen a, Gen b);

  /// Number of stored (unordered) nonzero brackets.
  std::size_t nonzero_bracket_count() const { return table_.size(); }

  const std::map<std::pair<int, int>, std::vector<BracketTerm>>& raw() const { return table_; }

 private:
  // key: (min index, max index); value stored for (a<b)
  std::map<std::pair<int, int>, std::vector<BracketTerm>> table_;
};

/// The full 15-generator extended Poincare algebra.
StructureConstants build_algebra();

/// The su(2) rotation subalgebra alone (control input for checks).
StructureConstants build_su2();

}  // namespace epalg
