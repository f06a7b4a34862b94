#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace minkcalc {

/// Exact rational scalar. GMP keeps values canonical: denominator > 0,
/// numerator and denominator coprime. All arithmetic is exact.
using Rational = mpq_class;

/// Arbitrary-precision integer, used for counts and combinatorial bounds.
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p/q" or a plain integer string. Returns nullopt on malformed
/// input or zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& x);

/// q^e with e >= 0, exact.
Rational pow_rational(const Rational& base, unsigned long e);

/// Natural log of x as a double. Works for magnitudes far outside the
/// double exponent range (uses mantissa/exponent decomposition, never
/// converts the rational itself to double). Requires x > 0.
double log_rational(const Rational& x);

/// floor(x) as an Integer.
Integer floor_rational(const Rational& x);

}  // namespace minkcalc
