#include "minkcalc/power_series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace minkcalc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

Rational factorial(std::size_t n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

}  // namespace

PowerSeries PowerSeries::polynomial(std::vector<Rational> coeffs) {
  PowerSeries f;
  f.family_ = Family::Polynomial;
  f.coeffs_ = std::move(coeffs);
  return f;
}

PowerSeries PowerSeries::geometric(const Rational& lambda) {
  if (abs(lambda) >= 1) throw std::invalid_argument("geometric ratio must satisfy |lambda| < 1");
  PowerSeries f;
  f.family_ = Family::Geometric;
  f.lambda_ = lambda;
  return f;
}

PowerSeries PowerSeries::exponential() {
  PowerSeries f;
  f.family_ = Family::Exponential;
  return f;
}

PowerSeries PowerSeries::squared_exponential() {
  PowerSeries f;
  f.family_ = Family::SquaredExponential;
  return f;
}

PowerSeries PowerSeries::custom(std::vector<Rational> coeffs, Majorant majorant,
                                std::optional<RatioFloor> ratio_floor) {
  if (sgn(majorant.rho) < 0 || majorant.rho >= 1)
    throw std::invalid_argument("custom majorant requires 0 <= rho < 1");
  if (sgn(majorant.C) < 0) throw std::invalid_argument("custom majorant requires C >= 0");
  if (majorant.start > coeffs.size())
    throw std::invalid_argument("custom coefficient list must cover indices below majorant start");
  for (std::size_t i = majorant.start; i < coeffs.size(); ++i) {
    if (abs(coeffs[i]) > majorant.C * pow_rational(majorant.rho, static_cast<unsigned long>(i)))
      throw std::invalid_argument("custom coefficient violates declared majorant");
  }
  if (ratio_floor && sgn(ratio_floor->eps) <= 0)
    throw std::invalid_argument("ratio floor must be positive");
  PowerSeries f;
  f.family_ = Family::Custom;
  f.coeffs_ = std::move(coeffs);
  f.majorant_ = std::move(majorant);
  f.ratio_floor_ = std::move(ratio_floor);
  return f;
}

Rational PowerSeries::coefficient(std::size_t i) const {
  switch (family_) {
    case Family::Polynomial:
      return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    case Family::Geometric:
      return pow_rational(lambda_, static_cast<unsigned long>(i));
    case Family::Exponential:
      return Rational(1) / factorial(i);
    case Family::SquaredExponential: {
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(i) * i);
      return Rational(Integer(1), den);
    }
    case Family::Custom:
      if (i >= coeffs_.size())
        throw std::out_of_range("custom series: coefficient index beyond explicit list");
      return coeffs_[i];
  }
  throw std::logic_error("unreachable");
}

Rational PowerSeries::tail_bound(std::size_t n) const {
  switch (family_) {
    case Family::Polynomial: {
      Rational s(0);
      for (std::size_t i = n; i < coeffs_.size(); ++i) s += abs(coeffs_[i]);
      return s;
    }
    case Family::Geometric: {
      // sum_{i>=n} |lambda|^i = |lambda|^n / (1 - |lambda|), exact.
      const Rational l = abs(lambda_);
      return pow_rational(l, static_cast<unsigned long>(n)) / (1 - l);
    }
    case Family::Exponential: {
      // sum_{i>=n} 1/i! <= (1/n!) * sum_k (n+1)^-k = (1/n!) * (n+1)/n
      // for n >= 1; for n = 0 use e < 3.
      if (n == 0) return Rational(3);
      return (Rational(1) / factorial(n)) * Rational(n + 1, n);
    }
    case Family::SquaredExponential: {
      // (n+k)^2 >= n^2 + 2nk gives
      // sum_{i>=n} 2^(-i^2) <= 2^(-n^2) / (1 - 4^-n).
      if (n == 0) return 1 + tail_bound(1);
      Integer sq;
      mpz_ui_pow_ui(sq.get_mpz_t(), 2, static_cast<unsigned long>(n) * n);
      Integer fourn;
      mpz_ui_pow_ui(fourn.get_mpz_t(), 4, static_cast<unsigned long>(n));
      return Rational(Integer(1), sq) * Rational(fourn, fourn - 1);
    }
    case Family::Custom: {
      Rational s(0);
      for (std::size_t i = n; i < coeffs_.size(); ++i) s += abs(coeffs_[i]);
      const std::size_t m = std::max(n, coeffs_.size());
      s += majorant_.C * pow_rational(majorant_.rho, static_cast<unsigned long>(m)) /
           (1 - majorant_.rho);
      return s;
    }
  }
  throw std::logic_error("unreachable");
}

double PowerSeries::log_tail_bound(std::size_t n) const {
  switch (family_) {
    case Family::Geometric: {
      if (sgn(lambda_) == 0) return n == 0 ? 0.0 : kNegInf;
      const Rational l = abs(lambda_);
      return static_cast<double>(n) * log_rational(l) - log_rational(1 - l);
    }
    case Family::SquaredExponential: {
      if (n == 0) return log_rational(tail_bound(0));
      constexpr double ln2 = 0.6931471805599453;
      const double nd = static_cast<double>(n);
      // -n^2 ln2 - ln(1 - 4^-n); the correction underflows to 0 for
      // large n, which is the right limit.
      return -nd * nd * ln2 - std::log1p(-std::exp(-2.0 * nd * ln2));
    }
    default: {
      const Rational t = tail_bound(n);
      if (sgn(t) == 0) return kNegInf;
      return log_rational(t);
    }
  }
}

bool PowerSeries::tail_is_zero(std::size_t n) const {
  switch (family_) {
    case Family::Polynomial:
      for (std::size_t i = n; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return false;
      return true;
    case Family::Geometric:
      return sgn(lambda_) == 0 && n > 0;
    case Family::Custom:
      return sgn(tail_bound(n)) == 0;
    default:
      return false;
  }
}

std::optional<RatioFloor> PowerSeries::ratio_floor() const {
  switch (family_) {
    case Family::Geometric:
      if (sgn(lambda_) == 0) return std::nullopt;
      return RatioFloor{abs(lambda_), 0};
    case Family::Custom:
      return ratio_floor_;
    default:
      // Polynomial and exponential coefficients have no positive ratio
      // floor; the squared-exponential ratios 2^-(2i+1) decay to zero.
      return std::nullopt;
  }
}

std::size_t PowerSeries::known_coefficient_limit() const {
  return family_ == Family::Custom ? coeffs_.size() : std::numeric_limits<std::size_t>::max();
}

std::string PowerSeries::describe() const {
  switch (family_) {
    case Family::Polynomial: {
      std::string s = "poly:";
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ',';
        s += to_string(coeffs_[i]);
      }
      return s;
    }
    case Family::Geometric:
      return "geom:" + to_string(lambda_);
    case Family::Exponential:
      return "exp";
    case Family::SquaredExponential:
      return "sqexp";
    case Family::Custom:
      return "custom";
  }
  throw std::logic_error("unreachable");
}

}  // namespace minkcalc
