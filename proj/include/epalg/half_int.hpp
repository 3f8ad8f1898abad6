#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include "epalg/rational.hpp"

namespace epalg {

/// Half-integer stored as twice its value. Exact ordering and arithmetic.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  static constexpr HalfInt from_int(int n) { return HalfInt(2 * n); }
  static HalfInt parse(const std::string& s);  // "3/2", "-1/2", "2"

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_nonneg() const { return twice_ >= 0; }
  constexpr int as_int() const {
    return twice_ / 2;  // caller checks is_integer()
  }
  double as_double() const { return twice_ / 2.0; }
  Rational as_rational() const { return make_rational(twice_, 2); }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr auto operator<=>(const HalfInt&) const = default;

  std::string to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

 private:
  int twice_ = 0;
};

inline HalfInt HalfInt::parse(const std::string& s) {
  Rational q = parse_rational(s);
  Rational t = q * 2;
  if (t.get_den() != 1) throw std::invalid_argument("not a half-integer: " + s);
  if (!t.get_num().fits_sint_p()) throw std::invalid_argument("half-integer out of range: " + s);
  return HalfInt(static_cast<int>(t.get_num().get_si()));
}

}  // namespace epalg
