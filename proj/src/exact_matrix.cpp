#include "epalg/exact_matrix.hpp"

namespace epalg {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ExactScalar::from_int(1);
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("add: shape mismatch");
  ExactMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("sub: shape mismatch");
  ExactMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
  return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("mul: inner dimension mismatch");
  ExactMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const ExactScalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const ExactScalar& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

ExactMatrix ExactMatrix::scaled(const ExactScalar& s) const {
  ExactMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
  return r;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

ExactMatrix ExactMatrix::dagger() const {
  ExactMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

ExactScalar ExactMatrix::trace() const {
  if (!is_square()) throw DimensionMismatch("trace: not square");
  ExactScalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

ExactMatrix ExactMatrix::inverse() const {
  if (!is_square()) throw DimensionMismatch("inverse: not square");
  const std::size_t n = rows_;
  ExactMatrix a = *this;
  ExactMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col).is_zero()) ++piv;
    if (piv == n) throw SingularMatrix();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    ExactScalar s = a.at(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) *= s;
      inv.at(col, j) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      ExactScalar f = a.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::size_t ExactMatrix::rank(PivotOrder order) const {
  ExactMatrix a = *this;
  const std::size_t nr = rows_, nc = cols_;
  std::size_t rank = 0;
  std::vector<bool> used(nr, false);
  // iterate columns in the requested order; pick the first unused row with a
  // nonzero entry, eliminate it from all other unused rows
  for (std::size_t cc = 0; cc < nc; ++cc) {
    std::size_t col = (order == PivotOrder::FirstNonzero) ? cc : nc - 1 - cc;
    std::size_t piv = nr;
    for (std::size_t r = 0; r < nr; ++r) {
      if (!used[r] && !a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv == nr) continue;
    used[piv] = true;
    ++rank;
    ExactScalar pinv = a.at(piv, col).inverse();
    for (std::size_t r = 0; r < nr; ++r) {
      if (used[r] || a.at(r, col).is_zero()) continue;
      ExactScalar f = a.at(r, col) * pinv;
      for (std::size_t j = 0; j < nc; ++j) {
        if (!a.at(piv, j).is_zero()) a.at(r, j) -= f * a.at(piv, j);
      }
    }
  }
  return rank;
}

std::size_t ExactMatrix::diff_count(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("diff_count: shape mismatch");
  std::size_t n = 0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) ++n;
  return n;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw DimensionMismatch("commutator: need equal square matrices");
  return a * b - b * a;
}

ExactMatrix sym_product(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix s = a * b + b * a;
  return s.scaled(ExactScalar(1, 2));
}

}  // namespace epalg
