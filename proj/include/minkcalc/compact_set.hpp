#pragma once

#include <cstddef>
#include <vector>

#include "minkcalc/interval.hpp"

namespace minkcalc {

/// Nonempty finite union of closed rational intervals in canonical form:
/// parts sorted by lo, pairwise disjoint and non-adjacent (consecutive
/// parts satisfy prev.hi < next.lo strictly). Immutable after
/// construction; every operation below is a pure function.
class CompactSet {
 public:
  /// Canonicalizes an arbitrary nonempty list of intervals (sort, merge
  /// overlapping and touching parts). Idempotent and order-insensitive.
  /// Throws std::invalid_argument on an empty list.
  static CompactSet normalize(std::vector<Interval> raw);

  static CompactSet point(Rational x);
  static CompactSet interval(Rational lo, Rational hi);

  const std::vector<Interval>& parts() const { return parts_; }
  std::size_t part_count() const { return parts_.size(); }
  const Rational& min() const { return parts_.front().lo; }
  const Rational& max() const { return parts_.back().hi; }

  bool contains(const Rational& x) const;
  /// Distance from x to the set (0 when x is a member).
  Rational dist(const Rational& x) const;

  bool operator==(const CompactSet& o) const { return parts_ == o.parts_; }

 private:
  explicit CompactSet(std::vector<Interval> parts) : parts_(std::move(parts)) {}
  std::vector<Interval> parts_;
};

CompactSet minkowski_sum(const CompactSet& a, const CompactSet& b);
CompactSet scale(const Rational& t, const CompactSet& a);
CompactSet minkowski_prod(const CompactSet& a, const CompactSet& b);
/// n-fold Minkowski product; the 0th power is {1}.
CompactSet minkowski_pow(const CompactSet& a, std::size_t n);

Rational diam(const CompactSet& a);
/// Length of the longest bounded complementary gap; 0 for a single
/// interval. Equals min{ l >= 0 : a + [0,l] is an interval }.
Rational gap(const CompactSet& a);
/// Exact Hausdorff distance between two nonempty interval unions.
Rational hausdorff_distance(const CompactSet& a, const CompactSet& b);
bool is_interval(const CompactSet& a);

/// True iff a is a subset of b (every part of a inside a part of b).
bool subset_of(const CompactSet& a, const CompactSet& b);

/// True iff a lies within [0,1].
bool within_unit(const CompactSet& a);

/// Outward-rounds every endpoint to the dyadic grid 2^-g; the result is
/// a superset of a with denominators capped at 2^g.
CompactSet coarsen(const CompactSet& a, unsigned g);

}  // namespace minkcalc
