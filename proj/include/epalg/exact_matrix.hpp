#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "epalg/exact_scalar.hpp"

namespace epalg {

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct SingularMatrix : std::domain_error {
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

/// Pivot scan order for exact elimination. Two independent orders give a
/// self-consistency oracle for rank results.
enum class PivotOrder { FirstNonzero, LastNonzero };

/// Dense matrix over Q(i,sqrt2). Row-major, immutable size.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  ExactScalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ExactScalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator-() const;
  ExactMatrix scaled(const ExactScalar& s) const;

  ExactMatrix transpose() const;
  /// Conjugate transpose.
  ExactMatrix dagger() const;
  ExactScalar trace() const;

  /// Exact inverse by Gauss-Jordan elimination. Throws SingularMatrix.
  ExactMatrix inverse() const;

  /// Exact rank by Gaussian elimination over the field.
  std::size_t rank(PivotOrder order = PivotOrder::FirstNonzero) const;

  /// Count of entries different from the corresponding entries of `o`.
  std::size_t diff_count(const ExactMatrix& o) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<ExactScalar> data_;
};

/// AB - BA. Throws DimensionMismatch unless both are square of equal size.
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

/// (AB + BA)/2.
ExactMatrix sym_product(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace epalg
