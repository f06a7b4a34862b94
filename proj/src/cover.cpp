#include "minkcalc/cover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace minkcalc {

namespace {

Interval ball(const GridSpec& g, std::size_t l) {
  const Rational mid(2 * static_cast<unsigned long>(l) + 1, 2 * static_cast<unsigned long>(g.M));
  return Interval(mid - g.eps, mid + g.eps);
}

void sort_intervals(std::vector<Interval>& v) {
  std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
}

// Enumerates nondecreasing multi-indices of length i over symbols
// 0..M-1 and applies fn to the product interval of the corresponding
// eps-balls.
template <typename Fn>
void for_each_power_interval(const GridSpec& g, std::size_t i, Fn&& fn) {
  std::vector<std::size_t> idx(i, 0);
  for (;;) {
    Interval prod = ball(g, idx[0]);
    for (std::size_t j = 1; j < i; ++j) prod = mul(prod, ball(g, idx[j]));
    fn(prod);
    // Next nondecreasing sequence.
    std::size_t j = i;
    while (j > 0 && idx[j - 1] == g.M - 1) --j;
    if (j == 0) break;
    const std::size_t v = idx[j - 1] + 1;
    for (std::size_t t = j - 1; t < i; ++t) idx[t] = v;
  }
}

}  // namespace

Integer multiset_count(std::size_t i, std::size_t M) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(i + M - 1),
               static_cast<unsigned long>(M - 1));
  return c;
}

Cover cover_power(const GridSpec& g, std::size_t i, const Integer& budget) {
  if (i == 0) throw std::invalid_argument("power cover needs i >= 1");
  Cover c;
  c.count_bound = multiset_count(i, g.M);
  c.diam_bound = 2 * Rational(static_cast<unsigned long>(i)) * g.eps;
  if (c.count_bound > budget) return c;
  c.intervals.reserve(c.count_bound.get_ui());
  for_each_power_interval(g, i, [&](const Interval& j) { c.intervals.push_back(j); });
  sort_intervals(c.intervals);
  c.materialized = true;
  return c;
}

Cover cover_series(const PowerSeries& f, const GridSpec& g, const Integer& budget) {
  const Rational rn = f.tail_bound(g.n);
  if (sgn(rn) == 0) {
    // Only a constant series keeps the declared length bound 4*R_n = 0
    // meaningful; anything else has no valid zero-tail cover.
    for (std::size_t i = 1; i < g.n; ++i) {
      if (sgn(f.coefficient(i)) != 0)
        throw std::invalid_argument("zero tail: series cover undefined for non-constant series");
    }
    Cover c;
    c.count_bound = 1;
    c.diam_bound = Rational(0);
    c.intervals.push_back(Interval::point(f.coefficient(0)));
    c.materialized = true;
    return c;
  }
  validate_grid_for_series(g, f);

  Cover c;
  c.count_bound = 1;
  for (std::size_t i = 1; i < g.n; ++i) c.count_bound *= multiset_count(i, g.M);
  c.diam_bound = 4 * rn;
  if (c.count_bound > budget) return c;

  // Cartesian product over the per-power systems J_1 x ... x J_{n-1},
  // folding a_0 and the tail interval into the running sum.
  std::vector<Interval> acc{Interval(f.coefficient(0) - rn, f.coefficient(0) + rn)};
  for (std::size_t i = 1; i < g.n; ++i) {
    const Rational a = f.coefficient(i);
    std::vector<Interval> balls;
    balls.reserve(multiset_count(i, g.M).get_ui());
    for_each_power_interval(g, i, [&](const Interval& j) { balls.push_back(scale(a, j)); });
    std::vector<Interval> next;
    next.reserve(acc.size() * balls.size());
    for (const auto& base : acc)
      for (const auto& b : balls) next.push_back(add(base, b));
    acc = std::move(next);
  }
  c.intervals = std::move(acc);
  sort_intervals(c.intervals);
  c.materialized = true;
  return c;
}

double capacity_log_bound(const PowerSeries& f, std::size_t n, std::size_t M, double s) {
  if (n == 0 || M == 0) throw std::invalid_argument("capacity bound needs n >= 1 and M >= 1");
  if (s <= 0) throw std::invalid_argument("capacity bound needs s > 0");
  const double log_tail = f.log_tail_bound(n);
  if (log_tail == -std::numeric_limits<double>::infinity())
    return -std::numeric_limits<double>::infinity();
  const double nd = static_cast<double>(n);
  constexpr double ln2 = 0.6931471805599453;
  return nd * static_cast<double>(M) * std::log(2.0 * nd) + s * (2.0 * ln2 + log_tail);
}

double capacity_log_bound_normalized(const PowerSeries& f, std::size_t n, std::size_t M,
                                     double s) {
  const double raw = capacity_log_bound(f, n, M, s);
  if (raw == -std::numeric_limits<double>::infinity()) return raw;
  const double nd = static_cast<double>(n);
  return raw / (nd * std::log(2.0 * nd));
}

std::size_t choose_m(const PowerSeries& f, std::size_t n) {
  if (n == 0) throw std::invalid_argument("choose_m needs n >= 1");
  const double log_tail = f.log_tail_bound(n);
  if (log_tail == -std::numeric_limits<double>::infinity())
    throw std::invalid_argument("polynomial: M_n undefined beyond degree");
  constexpr double ln2 = 0.6931471805599453;
  const double nd = static_cast<double>(n);
  const double t = -(2.0 * ln2 + log_tail) / (nd * std::log(2.0 * nd));
  if (t <= 1.0) return 1;
  const double m = std::floor(std::sqrt(t));
  const double cap = nd + 1.0;
  return static_cast<std::size_t>(std::max(1.0, std::min(cap, m)));
}

}  // namespace minkcalc
