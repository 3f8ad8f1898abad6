#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "epalg/rational.hpp"

namespace epalg {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero in Q(i,sqrt2)") {}
};

/// Element of the field Q(i,sqrt2):
///   value = (re_rat + re_root2*sqrt2) + i*(im_rat + im_root2*sqrt2).
/// All four coordinates are exact rationals, so equality is exact and the
/// field operations are closed.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(Rational re_rat, Rational re_root2, Rational im_rat, Rational im_root2)
      : re_rat_(std::move(re_rat)), re_root2_(std::move(re_root2)),
        im_rat_(std::move(im_rat)), im_root2_(std::move(im_root2)) {}
  explicit ExactScalar(const Rational& re) : re_rat_(re) {}
  ExactScalar(long num, long den) : re_rat_(make_rational(num, den)) {}

  static ExactScalar from_int(long n) { return ExactScalar(make_rational(n)); }
  static ExactScalar i() { return ExactScalar(Rational(0), Rational(0), Rational(1), Rational(0)); }
  static ExactScalar sqrt2() { return ExactScalar(Rational(0), Rational(1), Rational(0), Rational(0)); }
  /// sqrt of a nonnegative rational, when it lies in Q(sqrt2):
  /// q = r^2 or q = 2 r^2. Throws std::domain_error otherwise.
  static ExactScalar sqrt_of_rational(const Rational& q);

  const Rational& re_rat() const { return re_rat_; }
  const Rational& re_root2() const { return re_root2_; }
  const Rational& im_rat() const { return im_rat_; }
  const Rational& im_root2() const { return im_root2_; }

  bool is_zero() const {
    return re_rat_ == 0 && re_root2_ == 0 && im_rat_ == 0 && im_root2_ == 0;
  }
  bool is_real() const { return im_rat_ == 0 && im_root2_ == 0; }
  bool is_rational() const { return is_real() && re_root2_ == 0; }

  ExactScalar operator-() const {
    return {-re_rat_, -re_root2_, -im_rat_, -im_root2_};
  }
  ExactScalar conj() const {
    return {re_rat_, re_root2_, -im_rat_, -im_root2_};
  }

  ExactScalar operator+(const ExactScalar& o) const;
  ExactScalar operator-(const ExactScalar& o) const;
  ExactScalar operator*(const ExactScalar& o) const;
  ExactScalar operator/(const ExactScalar& o) const;  // throws DivisionByZero
  ExactScalar inverse() const;                        // throws DivisionByZero

  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
  ExactScalar& operator/=(const ExactScalar& o) { return *this = *this / o; }

  bool operator==(const ExactScalar& o) const {
    return re_rat_ == o.re_rat_ && re_root2_ == o.re_root2_ &&
           im_rat_ == o.im_rat_ && im_root2_ == o.im_root2_;
  }
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  Rational re_rat_{0}, re_root2_{0}, im_rat_{0}, im_root2_{0};
};

inline ExactScalar operator*(const Rational& q, const ExactScalar& s) {
  return ExactScalar(q) * s;
}

}  // namespace epalg
