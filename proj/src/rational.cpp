#include "bitmetric/rational.hpp"

#include <stdexcept>

#include "bitmetric/error.hpp"

namespace bitmetric {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string token(text);
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view num_digits = num;
  if (!num_digits.empty() && num_digits.front() == '-') num_digits.remove_prefix(1);
  if (!all_digits(num_digits) || !all_digits(den))
    throw ParseError("bad rational '" + token + "'");
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (sgn(q) == 0) throw ParseError("bad rational '" + token + "': zero denominator");
  mpq_class v(p, q);
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::pow2(long e) {
  if (e >= 0) return Rational(mpq_class(mpz_class(1) << static_cast<unsigned long>(e)));
  return Rational(mpq_class(mpz_class(1), mpz_class(1) << static_cast<unsigned long>(-e)));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace bitmetric
