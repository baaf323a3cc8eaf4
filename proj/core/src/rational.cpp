#include "hypercore/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace hypercore {

namespace {

mpq_class make_canonical(mpq_class v) {
  if (sgn(v.get_den()) == 0) throw std::invalid_argument("zero denominator");
  v.canonicalize();
  return v;
}

}  // namespace

Rational::Rational(long num, long den)
    : v_(make_canonical(mpq_class(mpz_class(num), mpz_class(den)))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den)
    : v_(make_canonical(mpq_class(num, den))) {}

Rational Rational::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  const auto parse_int = [](std::string_view t) {
    if (t.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("sign without digits");
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9')
        throw std::invalid_argument("malformed integer literal: " +
                                    std::string(t));
    }
    return mpz_class(std::string(t), 10);
  };
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  const mpz_class num = parse_int(s.substr(0, slash));
  const mpz_class den = parse_int(s.substr(slash + 1));
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

Rational Rational::abs() const {
  Rational r = *this;
  r.v_ = ::abs(r.v_);
  return r;
}

Rational Rational::pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base.is_zero() && exp < 0)
    throw std::invalid_argument("zero base with negative exponent");
  const unsigned long e =
      static_cast<unsigned long>(exp < 0 ? -exp : exp);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), e);
  return exp < 0 ? Rational(den, num) : Rational(num, den);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.v_ = -r.v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.v_;
}

}  // namespace hypercore
