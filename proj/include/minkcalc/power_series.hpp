#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "minkcalc/rational.hpp"

namespace minkcalc {

/// Geometric coefficient envelope: |a_i| <= C * rho^i for all i >= start.
struct Majorant {
  Rational C;
  Rational rho;  // 0 <= rho < 1
  std::size_t start = 0;
};

/// Declared lower bound on consecutive coefficient ratios:
/// |a_{i+1}| / |a_i| > eps for all i >= i_eps.
struct RatioFloor {
  Rational eps;
  std::size_t i_eps = 0;
};

/// A power series sum a_i x^i, absolutely convergent on [0,1], given as a
/// coefficient provider plus a proven upper bound on every tail
/// sum_{i>=n} |a_i|. Tail bounds are exact rationals and nonincreasing
/// in n.
class PowerSeries {
 public:
  enum class Family { Polynomial, Geometric, Exponential, SquaredExponential, Custom };

  static PowerSeries polynomial(std::vector<Rational> coeffs);
  /// Coefficients lambda^i; requires |lambda| < 1.
  static PowerSeries geometric(const Rational& lambda);
  /// Coefficients 1/i!.
  static PowerSeries exponential();
  /// Coefficients 2^(-i^2); tail bounds have a closed log-domain form,
  /// so they stay usable at indices where the rational itself would be
  /// astronomically large.
  static PowerSeries squared_exponential();
  /// Explicit leading coefficients plus a majorant for everything past
  /// the list. Coefficients with index >= majorant.start must respect
  /// the envelope (validated). The optional ratio floor is the caller's
  /// declaration about the full series; it cannot be inferred from a
  /// finite prefix.
  static PowerSeries custom(std::vector<Rational> coeffs, Majorant majorant,
                            std::optional<RatioFloor> ratio_floor = std::nullopt);

  Family family() const { return family_; }

  /// Exact coefficient a_i. For the custom family, indices past the
  /// explicit list are not specified and throw std::out_of_range.
  Rational coefficient(std::size_t i) const;

  /// Exact rational upper bound on sum_{i>=n} |a_i|.
  Rational tail_bound(std::size_t n) const;

  /// Natural log of tail_bound(n); -infinity when the tail is zero.
  /// Computed without materializing huge rationals where a closed form
  /// exists (geometric, squared-exponential).
  double log_tail_bound(std::size_t n) const;

  bool tail_is_zero(std::size_t n) const;

  /// Ratio floor usable for interval certificates. Geometric series
  /// provide (|lambda|, 0) intrinsically; custom series return their
  /// declaration; other families have none.
  std::optional<RatioFloor> ratio_floor() const;

  /// One past the largest index with a known exact coefficient
  /// (SIZE_MAX for closed-form families).
  std::size_t known_coefficient_limit() const;

  /// Spec string that parses back to this series, e.g. "geom:1/2".
  std::string describe() const;

 private:
  PowerSeries() = default;

  Family family_ = Family::Polynomial;
  std::vector<Rational> coeffs_;         // polynomial & custom
  Rational lambda_;                      // geometric
  Majorant majorant_;                    // custom
  std::optional<RatioFloor> ratio_floor_;
};

}  // namespace minkcalc
