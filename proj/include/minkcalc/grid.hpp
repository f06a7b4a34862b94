#pragma once

#include <cstddef>

#include "minkcalc/compact_set.hpp"
#include "minkcalc/power_series.hpp"

namespace minkcalc {

/// Grid stage parameters: M midpoint cells at stage n with neighborhood
/// radius eps. Always satisfies M <= n + 1 and 0 < eps < 1/(2M); covers
/// built for a specific series additionally need eps < R_n / (n * R_0),
/// revalidated where required.
struct GridSpec {
  std::size_t n;
  std::size_t M;
  Rational eps;
};

GridSpec make_grid_spec(std::size_t n, std::size_t M, Rational eps);

/// min{ R_n/(n R_0), 1/(2M) } / 2 — a concrete admissible radius for the
/// given series. Throws when the tail at n is zero.
Rational default_grid_eps(const PowerSeries& f, std::size_t n, std::size_t M);

GridSpec make_grid_spec_for(const PowerSeries& f, std::size_t n, std::size_t M);

/// Throws "epsnchoice violated" unless g.eps < R_n/(n R_0) for f.
void validate_grid_for_series(const GridSpec& g, const PowerSeries& f);

/// The M cell midpoints (2j+1)/(2M), j = 0..M-1. The stage index n only
/// tags the grid; the point set depends on M alone.
CompactSet grid_set(std::size_t n, std::size_t M);

/// Midpoints of the cells [j/M, (j+1)/M] that meet K (closed cells: a
/// boundary point selects both neighbors). Nonempty for K within [0,1],
/// with Hausdorff distance to K at most 1/(2M).
CompactSet nearest_grid_subset(const CompactSet& k, std::size_t M);

/// True iff some nonempty subset D of the grid has d_H(K, D) < eps.
/// Decided exactly via the optimal candidate D* = {grid points with
/// dist to K < eps}.
bool in_u_n(const CompactSet& k, const GridSpec& g);

}  // namespace minkcalc
