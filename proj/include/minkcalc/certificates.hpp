#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "minkcalc/compact_set.hpp"
#include "minkcalc/power_series.hpp"

namespace minkcalc {

enum class TailJustification { FiniteOnly, GeometricMonotone, RatioBound };

std::string to_string(TailJustification t);

struct GapChainRow {
  std::size_t i;
  Rational gap_i;      // gap of the i-th summand
  Rational diam_next;  // diam of the (i+1)-th summand
  bool holds;          // gap_i <= diam_next
};

/// Verified chain rows gap(A_i) <= diam(A_{i+1}). When the chain holds
/// from i0 through the last checked index, every partial sum from i0 on
/// has gap at most the gap of its final summand.
struct GapChainReport {
  std::size_t i0;           // first index from which all later rows hold
  std::size_t checked_upto; // last summand index covered by rows
  std::vector<GapChainRow> rows;
  TailJustification tail = TailJustification::FiniteOnly;
};

/// Checks the chain over an explicit list of summands, starting the row
/// scan at from. Also verifies the implied bound
/// gap(sum_{j=i0..m} A_j) <= gap(A_m) against materialized partial sums
/// for every m covered by the holding suffix.
GapChainReport gap_chain_check(const std::vector<CompactSet>& sets, std::size_t from);

/// Closed forms for the i-th summand a_i * {p,q}^(x)i with
/// 0 < p < q <= 1 and i >= 1:
///   diam = |a_i| (q^i - p^i),  gap = |a_i| (q - p) q^(i-1).
/// Cross-checked internally against the explicitly constructed set.
std::pair<Rational, Rational> two_point_terms(const PowerSeries& f, const Rational& p,
                                              const Rational& q, std::size_t i);

struct Certificate {
  std::string series;
  Rational p, q;
  std::size_t i0;             // chain holds for every i >= i0
  std::size_t checked_upto;   // rows verified exactly through this index
  std::vector<GapChainRow> rows;
  TailJustification tail;
  /// Consequence: the substitution image of every compact superset of
  /// {p, q} within [0,1] has nonempty interior.
};

struct NoCertificate {
  std::string reason;  // not a disproof; the chain was not established
};

using CertificateResult = std::variant<Certificate, NoCertificate>;

/// Attempts a full interval certificate for f<{p,q}>. Requires a ratio
/// floor (eps, i_eps) from the series and (q-p)/q^2 < eps; the finite
/// rows are checked exactly and the tail beyond the horizon is closed
/// by exact monotonicity of diam_{i+1}/gap_i.
CertificateResult two_point_certificate(const PowerSeries& f, const Rational& p,
                                        const Rational& q, std::size_t check_horizon = 64);

/// Smallest pair 0 < p < q <= 1 in K with (q-p)/q^2 < eps_ratio.
/// Endpoint pairs are searched lexicographically; a non-degenerate part
/// always yields a pair (two interior rationals arbitrarily close).
std::optional<std::pair<Rational, Rational>> find_close_pair(const CompactSet& k,
                                                             const Rational& eps_ratio);

struct GapTraceRow {
  std::size_t n;
  Rational gap_value;  // gap of the n-term partial sum, or a certified upper bound
  bool exact;
};

inline constexpr std::size_t kGapTracePartBudget = 500000;

/// Gap of each partial sum S_n, n = 1..n_max. Exact while the
/// materialized sum stays within part_budget parts; afterwards rows
/// carry the chained bound gap(S_n) <= gap(a_{n-1} K^(x)(n-1)), valid
/// because the chain conditions are themselves verified exactly.
/// Throws when neither route applies.
std::vector<GapTraceRow> enclosure_gap_trace(const PowerSeries& f, const CompactSet& k,
                                             std::size_t n_max,
                                             std::size_t part_budget = kGapTracePartBudget);

}  // namespace minkcalc
