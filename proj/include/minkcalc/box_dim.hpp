#pragma once

#include <vector>

#include "minkcalc/compact_set.hpp"
#include "minkcalc/power_series.hpp"

namespace minkcalc {

/// Number of grid cells [k*delta, (k+1)*delta) meeting A, computed
/// exactly from part endpoints: a part [lo, hi] occupies cells
/// floor(lo/delta) .. floor(hi/delta), so an endpoint exactly on a grid
/// line contributes its own cell.
Integer box_count(const CompactSet& a, const Rational& delta);

struct DimRow {
  Rational delta;
  Integer count;
};

struct DimEstimate {
  double slope;  // least-squares slope of log(count) against log(1/delta)
  std::vector<DimRow> rows;
};

/// Box-counting slope for the outer enclosure of f<K>: each scale delta
/// uses substitution tolerance delta/2 so tail inflation stays within
/// one cell per box. Scales must be strictly decreasing in (0,1).
DimEstimate dim_estimate(const PowerSeries& f, const CompactSet& k,
                         const std::vector<Rational>& scales);

}  // namespace minkcalc
