#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "minkcalc/rational.hpp"

namespace minkcalc {

/// Closed interval [lo, hi] with exact rational endpoints. Degenerate
/// point intervals (lo == hi) are allowed.
struct Interval {
  Rational lo;
  Rational hi;

  Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
  }

  static Interval point(Rational x) { return Interval(x, x); }

  Rational diam() const { return hi - lo; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }

  /// Distance from x to this interval (0 when inside).
  Rational dist(const Rational& x) const {
    if (x < lo) return lo - x;
    if (x > hi) return x - hi;
    return Rational(0);
  }

  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

inline Interval add(const Interval& a, const Interval& b) {
  return Interval(a.lo + b.lo, a.hi + b.hi);
}

inline Interval scale(const Rational& t, const Interval& a) {
  if (sgn(t) >= 0) return Interval(t * a.lo, t * a.hi);
  return Interval(t * a.hi, t * a.lo);
}

/// Exact Minkowski product of two intervals: the image of multiplication
/// on a product of intervals is the interval spanned by the four corner
/// products.
inline Interval mul(const Interval& a, const Interval& b) {
  const Rational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
  return Interval(std::min({c1, c2, c3, c4}), std::max({c1, c2, c3, c4}));
}

}  // namespace minkcalc
