#include <doctest.h>

#include <random>

#include "epalg/exact_matrix.hpp"
#include "epalg/float_matrix.hpp"

using namespace epalg;

namespace {

ExactScalar rand_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  return ExactScalar(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)),
                     make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
}

ExactMatrix rand_matrix(std::mt19937& rng, std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = rand_scalar(rng);
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic ground truth") {
  const ExactScalar one = ExactScalar::from_int(1);
  const ExactScalar s2 = ExactScalar::sqrt2();
  const ExactScalar i = ExactScalar::i();

  CHECK((one + s2) * (one - s2) == ExactScalar::from_int(-1));
  CHECK(i * i == ExactScalar::from_int(-1));
  ExactScalar half_s2(Rational(0), make_rational(1, 2), Rational(0), Rational(0));
  CHECK(half_s2 * half_s2 == ExactScalar(1, 2));
}

TEST_CASE("scalar field axioms on randomized triples") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    ExactScalar a = rand_scalar(rng), b = rand_scalar(rng), c = rand_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == ExactScalar());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == ExactScalar::from_int(1));
      CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("division by zero raises") {
  CHECK_THROWS_AS(ExactScalar::from_int(1) / ExactScalar(), DivisionByZero);
  CHECK_THROWS_AS(ExactScalar().inverse(), DivisionByZero);
}

TEST_CASE("sqrt of rational lands in the field or refuses") {
  CHECK(ExactScalar::sqrt_of_rational(make_rational(1, 4)) == ExactScalar(1, 2));
  CHECK(ExactScalar::sqrt_of_rational(Rational(2)) == ExactScalar::sqrt2());
  CHECK(ExactScalar::sqrt_of_rational(Rational(8)) ==
        ExactScalar::sqrt2() * ExactScalar::from_int(2));
  CHECK(ExactScalar::sqrt_of_rational(make_rational(1, 2)) ==
        ExactScalar(Rational(0), make_rational(1, 2), Rational(0), Rational(0)));
  CHECK_THROWS_AS(ExactScalar::sqrt_of_rational(Rational(3)), std::domain_error);
}

TEST_CASE("commutator basics") {
  std::mt19937 rng(11);
  ExactMatrix b = rand_matrix(rng, 4);
  CHECK(commutator(ExactMatrix::identity(4), b).is_zero());
  CHECK(commutator(b, b).is_zero());

  // sigma-like pair: [sx, sy] = 2i sz by hand
  ExactMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx.at(0, 1) = ExactScalar::from_int(1);
  sx.at(1, 0) = ExactScalar::from_int(1);
  sy.at(0, 1) = -ExactScalar::i();
  sy.at(1, 0) = ExactScalar::i();
  sz.at(0, 0) = ExactScalar::from_int(1);
  sz.at(1, 1) = ExactScalar::from_int(-1);
  CHECK(commutator(sx, sy) == sz.scaled(ExactScalar::i() * ExactScalar::from_int(2)));

  for (int t = 0; t < 20; ++t) {
    ExactMatrix x = rand_matrix(rng, 3), y = rand_matrix(rng, 3);
    CHECK(commutator(x, y) == -commutator(y, x));
  }
  CHECK_THROWS_AS(commutator(rand_matrix(rng, 2), rand_matrix(rng, 3)), DimensionMismatch);
}

TEST_CASE("exact rank") {
  ExactMatrix ones(2, 2);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) ones.at(r, c) = ExactScalar::from_int(1);
  CHECK(ones.rank() == 1);
  CHECK(ExactMatrix::zero(3, 5).rank() == 0);
  CHECK(ExactMatrix::identity(6).rank() == 6);

  // invariance under row permutation and pivot order
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    ExactMatrix m(5, 7);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 7; ++c)
        if ((r + c + static_cast<std::size_t>(t)) % 3 != 0) m.at(r, c) = rand_scalar(rng);
    std::size_t base = m.rank();
    CHECK(base == m.rank(PivotOrder::LastNonzero));
    ExactMatrix perm(5, 7);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 7; ++c) perm.at((r + 2) % 5, c) = m.at(r, c);
    CHECK(perm.rank() == base);
  }
}

TEST_CASE("exact inverse round trip") {
  std::mt19937 rng(5);
  for (int t = 0; t < 10; ++t) {
    ExactMatrix m = rand_matrix(rng, 4);
    try {
      ExactMatrix inv = m.inverse();
      CHECK(m * inv == ExactMatrix::identity(4));
    } catch (const SingularMatrix&) {
      // random matrix happened to be singular; rank must drop then
      CHECK(m.rank() < 4);
    }
  }
}

TEST_CASE("mat_exp ground truth") {
  // exp(0) = I
  FloatMatrix z = FloatMatrix::Zero(4, 4);
  CHECK((mat_exp(z) - FloatMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

  // nilpotent: N^2 = 0 -> exp(N) = I + N
  FloatMatrix n = FloatMatrix::Zero(3, 3);
  n(0, 1) = 2.5;
  n(0, 2) = -1.0;
  CHECK((mat_exp(n) - (FloatMatrix::Identity(3, 3) + n)).cwiseAbs().maxCoeff() < 1e-15);

  // diagonal phases
  FloatMatrix d = FloatMatrix::Zero(3, 3);
  const double theta = 0.7;
  for (int m = -1; m <= 1; ++m) d(m + 1, m + 1) = std::complex<double>(0, theta * m);
  FloatMatrix e = mat_exp(d);
  for (int m = -1; m <= 1; ++m)
    CHECK(std::abs(e(m + 1, m + 1) - std::exp(std::complex<double>(0, theta * m))) < 1e-14);

  // exp(A) exp(-A) = I for random bounded A
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 10; ++t) {
    FloatMatrix a(5, 5);
    for (int r = 0; r < 5; ++r)
      for (int c = 0; c < 5; ++c) a(r, c) = std::complex<double>(u(rng), u(rng));
    CHECK((mat_exp(a) * mat_exp(-a) - FloatMatrix::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-10);
  }

  // large-norm accuracy via the one-parameter property exp(A)^2 = exp(2A)
  FloatMatrix a(4, 4);
  std::mt19937 rng2(17);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) a(r, c) = std::complex<double>(u(rng2), u(rng2)) * 6.0;
  FloatMatrix e1 = mat_exp(a);
  FloatMatrix e2 = mat_exp(2 * a);
  CHECK(((e1 * e1 - e2).cwiseAbs().maxCoeff() / e2.cwiseAbs().maxCoeff()) < 1e-12);
}

TEST_CASE("eig_spectrum multiplicities") {
  FloatMatrix d = FloatMatrix::Zero(3, 3);
  d(0, 0) = 2;
  d(1, 1) = 0;
  d(2, 2) = -2;
  auto clusters = eig_spectrum(d);
  REQUIRE(clusters.size() == 3);
  CHECK(clusters[0].value.real() == doctest::Approx(-2));
  CHECK(clusters[1].value.real() == doctest::Approx(0));
  CHECK(clusters[2].value.real() == doctest::Approx(2));

  // similarity invariance
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FloatMatrix diag = FloatMatrix::Zero(4, 4);
  diag(0, 0) = 1;
  diag(1, 1) = 1;
  diag(2, 2) = -3;
  diag(3, 3) = 0.5;
  FloatMatrix s(4, 4);
  do {
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) s(r, c) = std::complex<double>(u(rng), u(rng));
  } while (std::abs(s.determinant()) < 0.1);
  auto ref = eig_sorted(diag);
  auto got = eig_sorted(s * diag * s.inverse());
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(ref[k] - got[k]) < 1e-10);
}
