#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epalg/exact_matrix.hpp"
#include "epalg/half_int.hpp"

namespace epalg {

struct InvalidLabel : std::invalid_argument {
  explicit InvalidLabel(const std::string& what) : std::invalid_argument(what) {}
};

/// Quantum numbers (Lambda, J, gamma, M) of one spinor state.
struct SpinorLabel {
  HalfInt Lambda, J, gamma, M;

  bool operator==(const SpinorLabel&) const = default;
  std::string to_string() const;
};

/// Label validity: Lambda - J a nonnegative integer, |gamma| <= J and
/// |M| <= J with integer steps.
bool label_valid(const SpinorLabel& l);
void require_valid(const SpinorLabel& l);  // throws InvalidLabel

/// Exponent tuple (n+^+, n-^+, n+^-, n-^-) over the four spinor variables
/// chi_+^(+), chi_-^(+), chi_+^(-), chi_-^(-).
using Monomial = std::array<int, 4>;

/// Homogeneous polynomial state. The mathematical state is
/// sqrt(prefactor_sq) * sum(terms); keeping the combinatorial square root
/// apart keeps every coefficient rational for every label.
struct SpinorPoly {
  std::map<Monomial, ExactScalar> terms;
  Rational prefactor_sq{1};
  enum class Source { Formula, Ladder } source = Source::Formula;

  bool is_zero() const;
  int total_degree() const;       // degree of any term; -1 if zero
  bool homogeneous() const;       // all terms equal degree
  /// Folds sqrt(prefactor_sq) into the coefficients when it lies in
  /// Q(sqrt2); throws std::domain_error otherwise.
  SpinorPoly normalized() const;
};

/// Coefficient of a ladder action: value = rat * sqrt(root) with root a
/// squarefree positive integer (root == 1 means the value is rational;
/// root == 2 still lies inside Q(i,sqrt2)).
struct LadderCoeff {
  Rational rat{0};
  std::uint64_t root = 1;

  static LadderCoeff from_rational(Rational q) { return {std::move(q), 1}; }
  /// sign * sqrt(radicand) with the square part pulled into rat.
  static LadderCoeff sqrt_of(const Rational& radicand, int sign = 1);

  bool is_zero() const { return rat == 0; }
  LadderCoeff operator*(const LadderCoeff& o) const;
  double as_double() const;
  bool representable_exact() const { return rat == 0 || root == 1 || root == 2; }
  ExactScalar as_exact() const;  // throws std::domain_error if not representable
  std::string to_string() const;
};

struct LadderResult {
  LadderCoeff coeff;
  std::optional<SpinorLabel> label;  // nullopt == annihilated

  bool annihilated() const { return !label.has_value(); }
};

enum class LadderOp { Jz, Jplus, Jminus, Gamma0, DeltaJplus, DeltaJminus, Casimir, J2 };

/// Label-level operator action (eigenvalues and ladder coefficients of the
/// raising/lowering table).
LadderResult apply_ladder(LadderOp op, const SpinorLabel& l);

/// Spinor metric sign (-1)^(Lambda-gamma). Throws InvalidLabel when
/// Lambda-gamma is not an integer.
ExactScalar spinor_metric(const SpinorLabel& l);

/// Number of states in the Lambda multiplet: sum over J = Lambda, Lambda-1,
/// ... of (2J+1)^2.
std::size_t multiplet_dimension(HalfInt Lambda);

/// All labels of the Lambda multiplet in canonical order: J descending from
/// Lambda, then gamma descending, then M descending.
std::vector<SpinorLabel> multiplet_labels(HalfInt Lambda);

/// Evaluates the explicit polynomial formula for one state. Requires both
/// chi exponents M+gamma and M-gamma nonnegative, otherwise throws
/// InvalidLabel (such states are reached by ladder action instead).
SpinorPoly build_state(const SpinorLabel& l);

/// Whether build_state accepts the label (exponents nonnegative).
bool formula_buildable(const SpinorLabel& l);

/// Full multiplet: M-extremal states from the formula, the rest filled by
/// exact J- ladder action. Order matches multiplet_labels.
std::vector<SpinorPoly> multiplet_states(HalfInt Lambda);

/// J- as a first-order substitution operator on the polynomial realization.
SpinorPoly lower_M(const SpinorPoly& p);

/// Monomial-coefficient Gram matrix of the multiplet states (rows =
/// states, columns = monomials). Full rank certifies independence.
/// Guarded to Lambda <= 3.
ExactMatrix gram_matrix(HalfInt Lambda);

}  // namespace epalg
