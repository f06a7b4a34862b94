#include "minkcalc/compact_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace minkcalc {

CompactSet CompactSet::normalize(std::vector<Interval> raw) {
  if (raw.empty()) throw std::invalid_argument("empty set not representable");
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  std::vector<Interval> out;
  out.reserve(raw.size());
  out.push_back(raw.front());
  for (std::size_t i = 1; i < raw.size(); ++i) {
    // Touching parts (prev.hi == next.lo) merge: the union is the same
    // point set and the canonical form must be unique.
    if (raw[i].lo <= out.back().hi) {
      if (raw[i].hi > out.back().hi) out.back().hi = raw[i].hi;
    } else {
      out.push_back(raw[i]);
    }
  }
  return CompactSet(std::move(out));
}

CompactSet CompactSet::point(Rational x) {
  return CompactSet({Interval::point(std::move(x))});
}

CompactSet CompactSet::interval(Rational lo, Rational hi) {
  return CompactSet({Interval(std::move(lo), std::move(hi))});
}

bool CompactSet::contains(const Rational& x) const {
  // Binary search for the first part with lo > x.
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                             [](const Rational& v, const Interval& p) { return v < p.lo; });
  if (it == parts_.begin()) return false;
  return std::prev(it)->contains(x);
}

Rational CompactSet::dist(const Rational& x) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                             [](const Rational& v, const Interval& p) { return v < p.lo; });
  if (it == parts_.end()) return std::prev(it)->dist(x);
  if (it == parts_.begin()) return it->dist(x);
  return std::min(it->dist(x), std::prev(it)->dist(x));
}

CompactSet minkowski_sum(const CompactSet& a, const CompactSet& b) {
  std::vector<Interval> sums;
  sums.reserve(a.part_count() * b.part_count());
  for (const auto& p : a.parts())
    for (const auto& q : b.parts()) sums.push_back(add(p, q));
  return CompactSet::normalize(std::move(sums));
}

CompactSet scale(const Rational& t, const CompactSet& a) {
  if (sgn(t) == 0) return CompactSet::point(Rational(0));
  std::vector<Interval> scaled;
  scaled.reserve(a.part_count());
  for (const auto& p : a.parts()) scaled.push_back(scale(t, p));
  return CompactSet::normalize(std::move(scaled));
}

CompactSet minkowski_prod(const CompactSet& a, const CompactSet& b) {
  std::vector<Interval> prods;
  prods.reserve(a.part_count() * b.part_count());
  for (const auto& p : a.parts())
    for (const auto& q : b.parts()) prods.push_back(mul(p, q));
  return CompactSet::normalize(std::move(prods));
}

CompactSet minkowski_pow(const CompactSet& a, std::size_t n) {
  CompactSet acc = CompactSet::point(Rational(1));
  for (std::size_t i = 0; i < n; ++i) acc = minkowski_prod(acc, a);
  return acc;
}

Rational diam(const CompactSet& a) { return a.max() - a.min(); }

Rational gap(const CompactSet& a) {
  Rational g(0);
  const auto& parts = a.parts();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    g = std::max(g, parts[i].lo - parts[i - 1].hi);
  }
  return g;
}

namespace {

// sup_{x in a} dist(x, b). The supremum is attained at an endpoint of a
// part of a or at a midpoint of a complementary gap of b that lies in a
// (dist(., b) is piecewise linear with slope +-1 and interior local
// maxima exactly at the gap midpoints).
Rational directed_hausdorff(const CompactSet& a, const CompactSet& b) {
  Rational best(0);
  for (const auto& p : a.parts()) {
    best = std::max(best, b.dist(p.lo));
    best = std::max(best, b.dist(p.hi));
  }
  const auto& bp = b.parts();
  for (std::size_t i = 1; i < bp.size(); ++i) {
    const Rational mid = (bp[i - 1].hi + bp[i].lo) / 2;
    if (a.contains(mid)) best = std::max(best, b.dist(mid));
  }
  return best;
}

}  // namespace

Rational hausdorff_distance(const CompactSet& a, const CompactSet& b) {
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

bool is_interval(const CompactSet& a) { return a.part_count() == 1; }

bool subset_of(const CompactSet& a, const CompactSet& b) {
  const auto& bp = b.parts();
  std::size_t j = 0;
  for (const auto& p : a.parts()) {
    while (j < bp.size() && bp[j].hi < p.lo) ++j;
    if (j == bp.size() || !(bp[j].lo <= p.lo && p.hi <= bp[j].hi)) return false;
  }
  return true;
}

bool within_unit(const CompactSet& a) {
  return sgn(a.min()) >= 0 && a.max() <= 1;
}

CompactSet coarsen(const CompactSet& a, unsigned g) {
  Integer scale_pow;
  mpz_ui_pow_ui(scale_pow.get_mpz_t(), 2, g);
  const Rational unit(Integer(1), scale_pow);
  std::vector<Interval> rounded;
  rounded.reserve(a.part_count());
  for (const auto& p : a.parts()) {
    Integer lo_cells = floor_rational(p.lo * scale_pow);
    Integer hi_cells;
    mpz_cdiv_q(hi_cells.get_mpz_t(), (p.hi * scale_pow).get_num().get_mpz_t(),
               (p.hi * scale_pow).get_den().get_mpz_t());
    rounded.emplace_back(Rational(lo_cells) * unit, Rational(hi_cells) * unit);
  }
  return CompactSet::normalize(std::move(rounded));
}

}  // namespace minkcalc
