#include "minkcalc/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace minkcalc {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den)) return std::nullopt;
  Integer n(num), d(den);
  if (d == 0) return std::nullopt;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational pow_rational(const Rational& base, unsigned long e) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

double log_rational(const Rational& x) {
  if (sgn(x) <= 0) throw std::domain_error("log_rational: argument must be positive");
  long en = 0, ed = 0;
  // |num| = dn * 2^en with dn in [0.5, 1); same for den.
  const double dn = mpz_get_d_2exp(&en, x.get_num().get_mpz_t());
  const double dd = mpz_get_d_2exp(&ed, x.get_den().get_mpz_t());
  constexpr double ln2 = 0.6931471805599453;
  return (std::log(dn) + static_cast<double>(en) * ln2) -
         (std::log(dd) + static_cast<double>(ed) * ln2);
}

Integer floor_rational(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

}  // namespace minkcalc
