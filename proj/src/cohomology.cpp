#include "epalg/cohomology.hpp"

#include <map>

namespace epalg {

namespace {

// dense rational matrix with exact elimination helpers, kept local: the
// cohomology differentials are real rational so the full Q(i,sqrt2) scalar
// would waste memory on the 455x105 block
struct RatMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Rational> data;

  RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Rational& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  std::size_t rank() const {
    RatMatrix a = *this;
    std::vector<bool> used(a.rows, false);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols; ++col) {
      std::size_t piv = a.rows;
      for (std::size_t r = 0; r < a.rows; ++r)
        if (!used[r] && a.at(r, col) != 0) {
          piv = r;
          break;
        }
      if (piv == a.rows) continue;
      used[piv] = true;
      ++rank;
      Rational pinv = 1 / a.at(piv, col);
      for (std::size_t r = 0; r < a.rows; ++r) {
        if (used[r] || a.at(r, col) == 0) continue;
        Rational f = a.at(r, col) * pinv;
        for (std::size_t j = col; j < a.cols; ++j)
          if (a.at(piv, j) != 0) a.at(r, j) -= f * a.at(piv, j);
      }
    }
    return rank;
  }
};

struct PairIndex {
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, std::size_t> index;

  explicit PairIndex(int n) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        index[{a, b}] = pairs.size();
        pairs.emplace_back(a, b);
      }
  }
  // signed lookup: (a,b) with a>b maps to -(b,a)
  std::pair<std::size_t, int> at(int a, int b) const {
    if (a < b) return {index.at({a, b}), 1};
    return {index.at({b, a}), -1};
  }
};

// d1: C^1 -> C^2, (d phi)(x,y) = -phi([x,y]); rows = pairs, cols = generators
RatMatrix d1_matrix(const StructureConstants& sc, int n, const PairIndex& pi) {
  RatMatrix m(pi.pairs.size(), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < pi.pairs.size(); ++r) {
    auto [a, b] = pi.pairs[r];
    for (const auto& t : sc.bracket(gen_at(a), gen_at(b)))
      m.at(r, static_cast<std::size_t>(index_of(t.c))) -= t.f;
  }
  return m;
}

// d2: C^2 -> C^3, (d om)(x,y,z) = -om([x,y],z) + om([x,z],y) - om([y,z],x)
RatMatrix d2_matrix_rat(const StructureConstants& sc, int n, const PairIndex& pi) {
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) triples.push_back({a, b, c});
  RatMatrix m(triples.size(), pi.pairs.size());
  for (std::size_t r = 0; r < triples.size(); ++r) {
    auto [x, y, z] = triples[r];
    auto accumulate = [&](int u, int v, int other, int sign) {
      for (const auto& t : sc.bracket(gen_at(u), gen_at(v))) {
        int c = index_of(t.c);
        if (c == other) continue;  // om(w,w) = 0
        auto [idx, s] = pi.at(c, other);
        m.at(r, idx) += Rational(sign * s) * t.f;
      }
    };
    accumulate(x, y, z, -1);
    accumulate(x, z, y, +1);
    accumulate(y, z, x, -1);
  }
  return m;
}

}  // namespace

ExactMatrix cohomology_d2_matrix(const StructureConstants& sc, int num_gen) {
  PairIndex pi(num_gen);
  RatMatrix m = d2_matrix_rat(sc, num_gen, pi);
  ExactMatrix out(m.rows, m.cols);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      if (m.at(r, c) != 0) out.at(r, c) = ExactScalar(m.at(r, c));
  return out;
}

CentralExtensionReport check_central_extensions(const StructureConstants& sc, int num_gen) {
  PairIndex pi(num_gen);
  RatMatrix d1 = d1_matrix(sc, num_gen, pi);
  RatMatrix d2 = d2_matrix_rat(sc, num_gen, pi);

  CentralExtensionReport report;
  report.dim_c2 = pi.pairs.size();
  report.rank_d1 = d1.rank();
  report.rank_d2 = d2.rank();
  std::size_t dim_ker_d2 = report.dim_c2 - report.rank_d2;
  report.dim_h2 = dim_ker_d2 - report.rank_d1;

  if (report.dim_h2 > 0) {
    // witness representatives: kernel basis of d2, reduced modulo im(d1).
    // Stack [d2; lambda-free elimination]: compute ker d2 by RREF on d2,
    // then reduce each kernel vector against the column space of d1^T rows.
    // For the small control algebras this brute-force route is enough.
    // Kernel of d2: solve d2 v = 0 by elimination over the pair variables.
    RatMatrix a = d2;
    std::vector<std::size_t> pivot_col_of_row;
    std::vector<bool> is_pivot_col(a.cols, false);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols && rank < a.rows; ++col) {
      std::size_t piv = a.rows;
      for (std::size_t r = rank; r < a.rows; ++r)
        if (a.at(r, col) != 0) {
          piv = r;
          break;
        }
      if (piv == a.rows) continue;
      for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(piv, j), a.at(rank, j));
      Rational pinv = 1 / a.at(rank, col);
      for (std::size_t j = 0; j < a.cols; ++j) a.at(rank, j) *= pinv;
      for (std::size_t r = 0; r < a.rows; ++r) {
        if (r == rank || a.at(r, col) == 0) continue;
        Rational f = a.at(r, col);
        for (std::size_t j = 0; j < a.cols; ++j) a.at(r, j) -= f * a.at(rank, j);
      }
      pivot_col_of_row.push_back(col);
      is_pivot_col[col] = true;
      ++rank;
    }
    // free columns parametrize ker d2; reduce each kernel vector modulo the
    // span of d1 columns by augmenting [d1 | v] rank tests
    std::vector<std::vector<Rational>> kernel;
    for (std::size_t free_col = 0; free_col < a.cols; ++free_col) {
      if (is_pivot_col[free_col]) continue;
      std::vector<Rational> v(a.cols, Rational(0));
      v[free_col] = 1;
      for (std::size_t r = 0; r < rank; ++r) v[pivot_col_of_row[r]] = -a.at(r, free_col);
      kernel.push_back(std::move(v));
    }
    // select kernel vectors independent modulo im d1 by growing an augmented
    // matrix [d1 columns | chosen witnesses] and checking rank growth
    std::vector<std::vector<Rational>> chosen;
    for (const auto& v : kernel) {
      if (report.witness_basis.size() == report.dim_h2) break;
      RatMatrix aug(pi.pairs.size(), d1.cols + chosen.size() + 1);
      for (std::size_t r = 0; r < pi.pairs.size(); ++r) {
        for (std::size_t c = 0; c < d1.cols; ++c) aug.at(r, c) = d1.at(r, c);
        for (std::size_t c = 0; c < chosen.size(); ++c) aug.at(r, d1.cols + c) = chosen[c][r];
        aug.at(r, d1.cols + chosen.size()) = v[r];
      }
      if (aug.rank() == report.rank_d1 + chosen.size() + 1) {
        CocycleWitness w;
        for (std::size_t k = 0; k < v.size(); ++k)
          if (v[k] != 0)
            w.entries.push_back({{gen_at(pi.pairs[k].first), gen_at(pi.pairs[k].second)}, v[k]});
        report.witness_basis.push_back(std::move(w));
        chosen.push_back(v);
      }
    }
  }
  return report;
}

}  // namespace epalg
