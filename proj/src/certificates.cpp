#include "minkcalc/certificates.hpp"

#include <algorithm>
#include <stdexcept>

namespace minkcalc {

std::string to_string(TailJustification t) {
  switch (t) {
    case TailJustification::FiniteOnly: return "finite-only";
    case TailJustification::GeometricMonotone: return "geometric-monotone";
    case TailJustification::RatioBound: return "ratio-bound";
  }
  throw std::logic_error("unreachable");
}

GapChainReport gap_chain_check(const std::vector<CompactSet>& sets, std::size_t from) {
  if (sets.empty()) throw std::invalid_argument("gap chain needs at least one summand");
  if (from >= sets.size()) throw std::invalid_argument("chain start out of range");

  GapChainReport report;
  report.checked_upto = sets.size() - 1;
  report.tail = TailJustification::FiniteOnly;
  for (std::size_t i = from; i + 1 < sets.size(); ++i) {
    const Rational g = gap(sets[i]);
    const Rational d = diam(sets[i + 1]);
    report.rows.push_back(GapChainRow{i, g, d, g <= d});
  }
  // First index whose suffix of rows holds throughout.
  std::size_t i0 = sets.size() - 1;
  for (auto it = report.rows.rbegin(); it != report.rows.rend(); ++it) {
    if (!it->holds) break;
    i0 = it->i;
  }
  report.i0 = i0;

  // The chain implies gap(sum_{j=i0..m} A_j) <= gap(A_m); confirm
  // against materialized partial sums.
  CompactSet acc = sets[i0];
  if (gap(acc) > gap(sets[i0])) throw std::logic_error("gap chain: implied bound violated");
  for (std::size_t m = i0 + 1; m < sets.size(); ++m) {
    acc = minkowski_sum(acc, sets[m]);
    if (gap(acc) > gap(sets[m])) throw std::logic_error("gap chain: implied bound violated");
  }
  return report;
}

namespace {

void require_two_point_domain(const Rational& p, const Rational& q) {
  if (!(0 < p && p < q && q <= 1))
    throw std::invalid_argument("two-point arguments require 0 < p < q <= 1");
}

CompactSet two_point_summand(const Rational& a, const Rational& p, const Rational& q,
                             std::size_t i) {
  std::vector<Interval> pts;
  pts.reserve(i + 1);
  for (std::size_t j = 0; j <= i; ++j) {
    pts.push_back(Interval::point(pow_rational(p, static_cast<unsigned long>(j)) *
                                  pow_rational(q, static_cast<unsigned long>(i - j))));
  }
  return scale(a, CompactSet::normalize(std::move(pts)));
}

}  // namespace

std::pair<Rational, Rational> two_point_terms(const PowerSeries& f, const Rational& p,
                                              const Rational& q, std::size_t i) {
  require_two_point_domain(p, q);
  if (i == 0) throw std::invalid_argument("two-point terms need i >= 1");
  const Rational a = abs(f.coefficient(i));
  const Rational d = a * (pow_rational(q, static_cast<unsigned long>(i)) -
                          pow_rational(p, static_cast<unsigned long>(i)));
  const Rational g = a * (q - p) * pow_rational(q, static_cast<unsigned long>(i - 1));
  // The closed forms must agree with the constructed summand.
  const CompactSet s = two_point_summand(f.coefficient(i), p, q, i);
  if (diam(s) != d || gap(s) != g)
    throw std::logic_error("two-point closed forms disagree with construction");
  return {d, g};
}

CertificateResult two_point_certificate(const PowerSeries& f, const Rational& p,
                                        const Rational& q, std::size_t check_horizon) {
  require_two_point_domain(p, q);
  const auto floor = f.ratio_floor();
  if (!floor) return NoCertificate{"series provides no ratio floor"};
  const Rational spread = (q - p) / (q * q);
  if (spread >= floor->eps)
    return NoCertificate{"(q-p)/q^2 = " + to_string(spread) + " >= ratio floor " +
                         to_string(floor->eps)};

  std::size_t horizon = check_horizon;
  const std::size_t limit = f.known_coefficient_limit();
  if (limit != static_cast<std::size_t>(-1)) {
    if (limit < 3) return NoCertificate{"explicit coefficient list too short"};
    horizon = std::min(horizon, limit - 2);
  }
  if (horizon < 1) return NoCertificate{"check horizon too small"};
  if (horizon < floor->i_eps)
    return NoCertificate{"check horizon below declared ratio-floor start"};

  std::vector<GapChainRow> rows;
  rows.reserve(horizon);
  auto cur = two_point_terms(f, p, q, 1);
  for (std::size_t i = 1; i <= horizon; ++i) {
    const auto next = two_point_terms(f, p, q, i + 1);
    rows.push_back(GapChainRow{i, cur.second, next.first, cur.second <= next.first});
    cur = next;
  }
  if (!rows.back().holds) return NoCertificate{"no chain start within horizon"};
  std::size_t i0 = horizon;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (!it->holds) break;
    i0 = it->i;
  }
  if (i0 == 1) i0 = 0;  // gap of the constant summand is 0, so row 0 holds

  TailJustification tail;
  if (f.family() == PowerSeries::Family::Geometric) {
    // diam_{i+1}/gap_i = |lambda| q^2 (1-(p/q)^{i+1}) / (q-p) is
    // strictly increasing, so the last holding row closes every later
    // index.
    tail = TailJustification::GeometricMonotone;
  } else {
    // Declared floor: for i >= horizon,
    // diam_{i+1}/gap_i > eps * q^2 (1-(p/q)^{horizon+2}) / (q-p);
    // require that to already be >= 1.
    const Rational factor = floor->eps * q * q *
                            (1 - pow_rational(p / q, static_cast<unsigned long>(horizon) + 2)) /
                            (q - p);
    if (factor < 1)
      return NoCertificate{"analytic tail condition not met at horizon (try a larger one)"};
    tail = TailJustification::RatioBound;
  }

  return Certificate{f.describe(), p, q, i0, horizon, std::move(rows), tail};
}

std::optional<std::pair<Rational, Rational>> find_close_pair(const CompactSet& k,
                                                             const Rational& eps_ratio) {
  if (sgn(eps_ratio) <= 0) throw std::invalid_argument("eps_ratio must be positive");

  std::vector<Rational> endpoints;
  for (const auto& part : k.parts()) {
    for (const Rational& x : {part.lo, part.hi}) {
      if (sgn(x) > 0 && x <= 1) endpoints.push_back(x);
    }
  }
  std::sort(endpoints.begin(), endpoints.end());
  endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());
  for (std::size_t a = 0; a < endpoints.size(); ++a) {
    for (std::size_t b = a + 1; b < endpoints.size(); ++b) {
      const Rational& pp = endpoints[a];
      const Rational& qq = endpoints[b];
      if ((qq - pp) / (qq * qq) < eps_ratio) return std::make_pair(pp, qq);
    }
  }

  // A non-degenerate part supplies interior rationals arbitrarily close
  // together; pick a pair near its upper end.
  for (const auto& part : k.parts()) {
    if (part.is_point()) continue;
    const Rational qq = std::min(part.hi, Rational(1));
    const Rational lo_eff = std::max(part.lo, Rational(0));
    if (qq <= lo_eff || sgn(qq) <= 0) continue;
    const Rational step = std::min(qq - lo_eff, eps_ratio * qq * qq) / 2;
    return std::make_pair(qq - step, qq);
  }
  return std::nullopt;
}

std::vector<GapTraceRow> enclosure_gap_trace(const PowerSeries& f, const CompactSet& k,
                                             std::size_t n_max, std::size_t part_budget) {
  if (!within_unit(k)) throw std::domain_error("substitution domain violated");
  if (n_max == 0) throw std::invalid_argument("trace needs n_max >= 1");

  std::vector<GapTraceRow> out;
  out.reserve(n_max);
  CompactSet acc = CompactSet::point(f.coefficient(0));
  CompactSet power = CompactSet::point(Rational(1));
  bool exact = true;
  Rational bound = gap(acc);
  out.push_back(GapTraceRow{1, bound, true});

  for (std::size_t n = 2; n <= n_max; ++n) {
    power = minkowski_prod(power, k);
    const Rational a = f.coefficient(n - 1);
    if (sgn(a) == 0) {
      out.push_back(GapTraceRow{n, exact ? gap(acc) : bound, exact});
      continue;
    }
    const CompactSet term = scale(a, power);
    if (exact && acc.part_count() * term.part_count() <= part_budget) {
      acc = minkowski_sum(acc, term);
      bound = gap(acc);
      out.push_back(GapTraceRow{n, bound, true});
    } else {
      // Chained bound: gap(S_{n-1}) <= bound <= diam(term) lets the gap
      // calculus carry gap(S_n) <= gap(term).
      if (exact) {
        exact = false;
        bound = gap(acc);
      }
      if (bound > diam(term))
        throw std::runtime_error(
            "gap trace: materialization budget exceeded and gap chain does not apply");
      bound = gap(term);
      out.push_back(GapTraceRow{n, bound, false});
    }
  }
  return out;
}

}  // namespace minkcalc
