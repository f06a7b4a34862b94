#include "minkcalc/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace minkcalc {

GridSpec make_grid_spec(std::size_t n, std::size_t M, Rational eps) {
  if (n == 0 || M == 0) throw std::invalid_argument("grid spec requires n >= 1 and M >= 1");
  if (M > n + 1) throw std::invalid_argument("grid spec requires M <= n + 1");
  if (sgn(eps) <= 0 || eps >= Rational(1, 2 * static_cast<unsigned long>(M)))
    throw std::invalid_argument("grid spec requires 0 < eps < 1/(2M)");
  return GridSpec{n, M, std::move(eps)};
}

Rational default_grid_eps(const PowerSeries& f, std::size_t n, std::size_t M) {
  const Rational rn = f.tail_bound(n);
  if (sgn(rn) == 0) throw std::invalid_argument("zero tail: no admissible grid radius");
  const Rational r0 = f.tail_bound(0);
  const Rational a = rn / (Rational(static_cast<unsigned long>(n)) * r0);
  const Rational b = Rational(1, 2 * static_cast<unsigned long>(M));
  return std::min(a, b) / 2;
}

GridSpec make_grid_spec_for(const PowerSeries& f, std::size_t n, std::size_t M) {
  GridSpec g = make_grid_spec(n, M, default_grid_eps(f, n, M));
  validate_grid_for_series(g, f);
  return g;
}

void validate_grid_for_series(const GridSpec& g, const PowerSeries& f) {
  const Rational rn = f.tail_bound(g.n);
  if (sgn(rn) == 0) {
    // A zero tail leaves no admissible radius; handled by the caller
    // (cover_series degenerates or rejects).
    throw std::invalid_argument("epsnchoice violated");
  }
  const Rational r0 = f.tail_bound(0);
  if (g.eps >= rn / (Rational(static_cast<unsigned long>(g.n)) * r0))
    throw std::invalid_argument("epsnchoice violated");
}

CompactSet grid_set(std::size_t /*n*/, std::size_t M) {
  if (M == 0) throw std::invalid_argument("grid requires M >= 1");
  std::vector<Interval> pts;
  pts.reserve(M);
  for (std::size_t j = 0; j < M; ++j)
    pts.push_back(Interval::point(Rational(2 * static_cast<unsigned long>(j) + 1,
                                           2 * static_cast<unsigned long>(M))));
  return CompactSet::normalize(std::move(pts));
}

CompactSet nearest_grid_subset(const CompactSet& k, std::size_t M) {
  if (!within_unit(k)) throw std::domain_error("grid approximation requires K within [0,1]");
  if (M == 0) throw std::invalid_argument("grid requires M >= 1");
  const Rational m(static_cast<unsigned long>(M));
  std::vector<bool> hit(M, false);
  for (const auto& p : k.parts()) {
    // Cells [j/M, (j+1)/M] meeting [lo, hi]. A part endpoint exactly on
    // a cell boundary j/M belongs to cells j-1 and j.
    const Rational lo_scaled = p.lo * m;
    const Rational hi_scaled = p.hi * m;
    Integer jlo = floor_rational(lo_scaled);
    if (Rational(jlo) == lo_scaled && jlo > 0) jlo -= 1;
    Integer jhi = floor_rational(hi_scaled);
    long a = std::max(0L, jlo.get_si());
    long b = std::min(static_cast<long>(M) - 1, jhi.get_si());
    for (long j = a; j <= b; ++j) hit[static_cast<std::size_t>(j)] = true;
  }
  std::vector<Interval> pts;
  for (std::size_t j = 0; j < M; ++j) {
    if (hit[j])
      pts.push_back(Interval::point(Rational(2 * static_cast<unsigned long>(j) + 1,
                                             2 * static_cast<unsigned long>(M))));
  }
  CompactSet d = CompactSet::normalize(std::move(pts));
  if (hausdorff_distance(k, d) > Rational(1, 2 * static_cast<unsigned long>(M)))
    throw std::logic_error("grid approximation exceeded 1/(2M)");
  return d;
}

bool in_u_n(const CompactSet& k, const GridSpec& g) {
  if (!within_unit(k)) throw std::domain_error("membership test requires K within [0,1]");
  const CompactSet grid = grid_set(g.n, g.M);
  std::vector<Interval> close;
  for (const auto& p : grid.parts()) {
    if (k.dist(p.lo) < g.eps) close.push_back(p);
  }
  if (close.empty()) return false;
  const CompactSet dstar = CompactSet::normalize(std::move(close));
  return hausdorff_distance(k, dstar) < g.eps;
}

}  // namespace minkcalc
