#pragma once

#include <cstddef>

#include "minkcalc/compact_set.hpp"
#include "minkcalc/power_series.hpp"

namespace minkcalc {

inline constexpr std::size_t kDefaultTermBudget = 10000;

struct SubstitutionResult {
  CompactSet sum;   // exact partial sum of the first `terms` terms
  Rational radius;  // proven bound on the omitted tail
  std::size_t terms;
};

/// Smallest truncation order n with tail_bound(f, n) <= tol (searched
/// from n = 1). Polynomials always use the full coefficient list so the
/// returned radius is 0. Throws std::runtime_error when no order within
/// the term budget reaches tol, or when a custom series runs out of
/// explicit coefficients first.
std::size_t truncation_order(const PowerSeries& f, const Rational& tol,
                             std::size_t term_budget = kDefaultTermBudget);

/// sum_{i<n} a_i * K^(x)i, computed exactly with Minkowski operations
/// (zero coefficients are skipped). Requires K within [0,1] and n >= 1.
CompactSet partial_sum(const PowerSeries& f, const CompactSet& k, std::size_t n);

/// Truncates at truncation_order(f, tol) and returns the exact partial
/// sum S together with r = tail_bound at that order. Contract: the full
/// substitution image lies within Hausdorff distance r of S and inside
/// S + [-r, r].
SubstitutionResult substitute(const PowerSeries& f, const CompactSet& k, const Rational& tol,
                              std::size_t term_budget = kDefaultTermBudget);

/// S + [-r, r] for the truncation above: a guaranteed superset of the
/// substitution image. Internally the fattening interval is folded into
/// the Minkowski sum first (same exact set, intermediate unions stay
/// small because overlapping parts merge).
CompactSet outer_enclosure(const PowerSeries& f, const CompactSet& k, const Rational& tol,
                           std::size_t term_budget = kDefaultTermBudget);

}  // namespace minkcalc
