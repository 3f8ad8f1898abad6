#include "epalg/exact_scalar.hpp"

#include <cmath>
#include <sstream>

namespace epalg {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  try {
    Rational q(s);  // accepts "p" and "p/q"
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (...) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

std::string to_string(const Rational& q) {
  return q.get_str();
}

Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (exp < 0) {
    if (base == 0) throw std::domain_error("0^negative");
    return Rational(1) / pow_rational(base, -exp);
  }
  Rational r(1), b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rational factorial_rational(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

SquarefreeSplit split_squarefree(std::uint64_t n) {
  SquarefreeSplit out{1, 1};
  if (n == 0) return {0, 0};
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) out.square_root_part *= p;
    if (e % 2 == 1) out.squarefree_part *= p;
  }
  out.squarefree_part *= n;  // any leftover factor is a single prime
  return out;
}

ExactScalar ExactScalar::sqrt_of_rational(const Rational& q) {
  if (q < 0) throw std::domain_error("sqrt of negative rational");
  if (q == 0) return ExactScalar();
  // sqrt(p/den) = sqrt(p*den)/den
  mpz_class m = q.get_num() * q.get_den();
  mpz_class root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t());
  if (rem == 0) {
    Rational r(root, q.get_den());
    r.canonicalize();
    return ExactScalar(r);
  }
  // try m = 2 * square
  if (m % 2 == 0) {
    mpz_class half = m / 2;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), half.get_mpz_t());
    if (rem == 0) {
      Rational r(root, q.get_den());
      r.canonicalize();
      return ExactScalar(Rational(0), r, Rational(0), Rational(0));
    }
  }
  throw std::domain_error("sqrt(" + epalg::to_string(q) + ") is not in Q(sqrt2)");
}

namespace {
// component arithmetic in Q(sqrt2): pairs (a,b) meaning a + b*sqrt2
struct R2 {
  Rational a, b;
};
inline R2 add(const R2& x, const R2& y) { return {x.a + y.a, x.b + y.b}; }
inline R2 sub(const R2& x, const R2& y) { return {x.a - y.a, x.b - y.b}; }
inline R2 mul(const R2& x, const R2& y) {
  return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
}
inline bool zero(const R2& x) { return x.a == 0 && x.b == 0; }
inline R2 inv(const R2& x) {
  // 1/(a+b*sqrt2) = (a-b*sqrt2)/(a^2-2b^2); denominator vanishes only at 0
  Rational d = x.a * x.a - 2 * x.b * x.b;
  if (d == 0) throw DivisionByZero();
  return {x.a / d, -x.b / d};
}
}  // namespace

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  return {re_rat_ + o.re_rat_, re_root2_ + o.re_root2_, im_rat_ + o.im_rat_,
          im_root2_ + o.im_root2_};
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const {
  return {re_rat_ - o.re_rat_, re_root2_ - o.re_root2_, im_rat_ - o.im_rat_,
          im_root2_ - o.im_root2_};
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  R2 x{re_rat_, re_root2_}, y{im_rat_, im_root2_};
  R2 u{o.re_rat_, o.re_root2_}, v{o.im_rat_, o.im_root2_};
  R2 re = sub(mul(x, u), mul(y, v));
  R2 im = add(mul(x, v), mul(y, u));
  return {re.a, re.b, im.a, im.b};
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // 1/z = conj(z) / (z * conj(z)); the norm lives in Q(sqrt2)
  R2 x{re_rat_, re_root2_}, y{im_rat_, im_root2_};
  R2 n = add(mul(x, x), mul(y, y));
  if (zero(n)) throw DivisionByZero();
  R2 ninv = inv(n);
  R2 re = mul(x, ninv);
  R2 im = mul(R2{-y.a, -y.b}, ninv);
  return {re.a, re.b, im.a, im.b};
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
  return *this * o.inverse();
}

std::complex<double> ExactScalar::to_complex() const {
  static const double s2 = std::sqrt(2.0);
  return {to_double(re_rat_) + to_double(re_root2_) * s2,
          to_double(im_rat_) + to_double(im_root2_) * s2};
}

std::string ExactScalar::to_string() const {
  std::ostringstream os;
  bool some = false;
  auto emit = [&](const Rational& q, const char* unit) {
    if (q == 0) return;
    if (some && q > 0) os << "+";
    os << epalg::to_string(q) << unit;
    some = true;
  };
  emit(re_rat_, "");
  emit(re_root2_, "*sqrt2");
  emit(im_rat_, "*i");
  emit(im_root2_, "*i*sqrt2");
  if (!some) os << "0";
  return os.str();
}

}  // namespace epalg
