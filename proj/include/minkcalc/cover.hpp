#pragma once

#include <cstddef>
#include <vector>

#include "minkcalc/grid.hpp"
#include "minkcalc/power_series.hpp"

namespace minkcalc {

inline constexpr unsigned long kDefaultCoverBudget = 1000000;

/// Finite interval system with declared bounds. Lazy covers (count
/// beyond the materialization budget) carry the bounds only.
struct Cover {
  std::vector<Interval> intervals;  // pre-dedup enumeration, sorted; empty when lazy
  Integer count_bound;
  Rational diam_bound;
  bool materialized = false;
};

/// C(i + M - 1, M - 1): nondecreasing multi-indices of length i over M
/// symbols.
Integer multiset_count(std::size_t i, std::size_t M);

/// Interval system covering K^(x)i for every K within eps of a nonempty
/// grid subset: all products I_{l_0}...I_{l_{i-1}} over nondecreasing
/// multi-indices, where I_l is the closed eps-ball around grid point l.
/// Count bound C(i+M-1, M-1); every interval has length at most 2*i*eps.
Cover cover_power(const GridSpec& g, std::size_t i, const Integer& budget = kDefaultCoverBudget);

/// Interval system covering the substitution image f<K> for every K in
/// the eps-neighborhood U_n of the grid: intervals a_0 + sum a_i J_i +
/// [-R_n, R_n] with J_i drawn from the power covers. Count bound is the
/// product of the per-power counts; every interval is shorter than
/// 4 R_n. Requires eps < R_n/(n R_0) ("epsnchoice violated" otherwise);
/// a zero tail is accepted only for constant series.
Cover cover_series(const PowerSeries& f, const GridSpec& g,
                   const Integer& budget = kDefaultCoverBudget);

/// log of the capacity bound count * (4 R_n)^s, i.e.
/// n*M*log(2n) + s*log(4 R_n), evaluated entirely in the log domain.
/// Returns -infinity when the tail at n is zero.
double capacity_log_bound(const PowerSeries& f, std::size_t n, std::size_t M, double s);

/// capacity_log_bound divided by n*log(2n):
/// M + s * log(4 R_n) / (n log 2n).
double capacity_log_bound_normalized(const PowerSeries& f, std::size_t n, std::size_t M,
                                     double s);

/// Stage-n grid size max(1, min(n+1, floor(sqrt(T_n)))) where
/// T_n = -log(4 R_n) / (n log 2n). Grows without bound exactly when the
/// tails decay superexponentially, while keeping M <= n+1. Throws on a
/// zero tail.
std::size_t choose_m(const PowerSeries& f, std::size_t n);

}  // namespace minkcalc
