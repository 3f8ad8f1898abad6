#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epalg/exact_matrix.hpp"
#include "epalg/generators.hpp"
#include "epalg/spinor_basis.hpp"

namespace epalg {

/// One entry of the §-data correction log: the matrix value shipped differs
/// from the source display at (row, col). Silent correction is forbidden;
/// every amendment is listed with the original value.
struct Amendment {
  Gen gen;
  std::size_t row, col;
  ExactScalar printed;
  ExactScalar amended;
};

/// Outcome of one representation-level check.
struct RepCheck {
  std::string name;
  bool pass = false;
  bool exact = true;        // exact-zero residual vs float tolerance
  double residual = 0.0;    // meaningful when !exact or for reporting
  std::string detail;
};

struct ValidationReport {
  std::vector<RepCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const RepCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// A finite-dimensional matrix realization of generators. Lambda-type reps
/// carry the J/K/Gamma sector only (P and G act as zero there); the adjoint
/// carries all 15.
struct Representation {
  std::size_t dim = 0;
  std::optional<HalfInt> lambda;
  std::vector<SpinorLabel> basis;          // empty for the adjoint
  std::map<Gen, ExactMatrix> mats;
  ExactMatrix metric;                      // diagonal g
  std::vector<Amendment> manifest;
  ValidationReport validation;
  std::string name;

  bool has(Gen g) const { return mats.count(g) != 0; }
  const ExactMatrix& mat(Gen g) const { return mats.at(g); }
  /// Generator matrix, with absent P/G sectors read as zero.
  ExactMatrix mat_or_zero(Gen g) const {
    auto it = mats.find(g);
    return it != mats.end() ? it->second : ExactMatrix::zero(dim, dim);
  }
};

}  // namespace epalg
