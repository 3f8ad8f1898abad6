#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace epalg {

/// Arbitrary-precision rational. mpq_class keeps values canonical (lowest
/// terms, positive denominator) through arithmetic; only raw num/den
/// construction needs an explicit canonicalize.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

/// Canonical "p/q" form; integers print without the "/1".
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational pow_rational(const Rational& base, long exp);

/// n! as a rational (n >= 0).
Rational factorial_rational(unsigned n);

/// Largest s with s^2 | n, and the squarefree remainder: n = s^2 * r.
/// Used to canonicalize sqrt(n) = s*sqrt(r) for small n.
struct SquarefreeSplit {
  std::uint64_t square_root_part;  // s
  std::uint64_t squarefree_part;   // r
};
SquarefreeSplit split_squarefree(std::uint64_t n);

}  // namespace epalg
