#include "minkcalc/substitution.hpp"

#include <stdexcept>
#include <vector>

namespace minkcalc {

namespace {

void require_unit_domain(const CompactSet& k) {
  if (!within_unit(k)) throw std::domain_error("substitution domain violated");
}

}  // namespace

std::size_t truncation_order(const PowerSeries& f, const Rational& tol,
                             std::size_t term_budget) {
  if (sgn(tol) <= 0) throw std::invalid_argument("tolerance must be positive");
  if (f.family() == PowerSeries::Family::Polynomial) {
    std::size_t n = 1;
    while (!f.tail_is_zero(n)) ++n;
    return n;
  }
  for (std::size_t n = 1; n <= term_budget; ++n) {
    if (f.tail_bound(n) <= tol) {
      if (n > f.known_coefficient_limit())
        throw std::runtime_error("tolerance unreachable within explicit coefficient list");
      return n;
    }
  }
  throw std::runtime_error("tolerance unreachable within budget");
}

CompactSet partial_sum(const PowerSeries& f, const CompactSet& k, std::size_t n) {
  require_unit_domain(k);
  if (n == 0) throw std::invalid_argument("partial sum needs at least one term");
  CompactSet acc = CompactSet::point(f.coefficient(0));
  CompactSet power = CompactSet::point(Rational(1));
  for (std::size_t i = 1; i < n; ++i) {
    power = minkowski_prod(power, k);
    const Rational a = f.coefficient(i);
    if (sgn(a) == 0) continue;
    acc = minkowski_sum(acc, scale(a, power));
  }
  return acc;
}

SubstitutionResult substitute(const PowerSeries& f, const CompactSet& k, const Rational& tol,
                              std::size_t term_budget) {
  const std::size_t n = truncation_order(f, tol, term_budget);
  return SubstitutionResult{partial_sum(f, k, n), f.tail_bound(n), n};
}

CompactSet outer_enclosure(const PowerSeries& f, const CompactSet& k, const Rational& tol,
                           std::size_t term_budget) {
  require_unit_domain(k);
  const std::size_t n = truncation_order(f, tol, term_budget);
  const Rational r = f.tail_bound(n);

  std::vector<CompactSet> powers;
  powers.reserve(n);
  powers.push_back(CompactSet::point(Rational(1)));
  for (std::size_t i = 1; i < n; ++i) powers.push_back(minkowski_prod(powers.back(), k));

  // Accumulate small terms first: the [-r, r] seed keeps every
  // intermediate part at least 2r wide, so translates merge instead of
  // multiplying the part count.
  CompactSet acc = CompactSet::interval(f.coefficient(0) - r, f.coefficient(0) + r);
  for (std::size_t i = n; i-- > 1;) {
    const Rational a = f.coefficient(i);
    if (sgn(a) == 0) continue;
    acc = minkowski_sum(acc, scale(a, powers[i]));
  }
  return acc;
}

}  // namespace minkcalc
