#include "minkcalc/box_dim.hpp"

#include <cmath>
#include <stdexcept>

#include "minkcalc/substitution.hpp"

namespace minkcalc {

Integer box_count(const CompactSet& a, const Rational& delta) {
  if (sgn(delta) <= 0) throw std::invalid_argument("box size must be positive");
  Integer total(0);
  Integer prev_hi;  // last occupied cell of the previous part
  bool have_prev = false;
  for (const auto& p : a.parts()) {
    Integer klo = floor_rational(p.lo / delta);
    const Integer khi = floor_rational(p.hi / delta);
    if (have_prev && klo <= prev_hi) klo = prev_hi + 1;  // parts may share a cell
    if (khi >= klo) total += khi - klo + 1;
    if (!have_prev || khi > prev_hi) prev_hi = khi;
    have_prev = true;
  }
  return total;
}

DimEstimate dim_estimate(const PowerSeries& f, const CompactSet& k,
                         const std::vector<Rational>& scales) {
  if (scales.size() < 2) throw std::invalid_argument("need at least two scales");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (sgn(scales[i]) <= 0 || scales[i] >= 1)
      throw std::invalid_argument("scales must lie in (0,1)");
    if (i > 0 && scales[i] >= scales[i - 1])
      throw std::invalid_argument("scales must be strictly decreasing");
  }

  DimEstimate est;
  est.rows.reserve(scales.size());
  std::vector<double> xs, ys;
  for (const auto& delta : scales) {
    const CompactSet enclosure = outer_enclosure(f, k, delta / 2);
    Integer count = box_count(enclosure, delta);
    xs.push_back(-log_rational(delta));
    ys.push_back(std::log(count.get_d()));
    est.rows.push_back(DimRow{delta, std::move(count)});
  }

  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  est.slope = sxy / sxx;
  return est;
}

}  // namespace minkcalc
