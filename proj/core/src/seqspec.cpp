#include "hypercore/seqspec.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "hypercore/numeric.hpp"

namespace hypercore {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("malformed sequence spec: " + what);
}

}  // namespace

SeqSpec SeqSpec::explicit_list(std::vector<Rational> values,
                               Rational error_bound) {
  if (values.empty()) bad("empty list");
  if (error_bound.sign() < 0) bad("negative error bound");
  SeqSpec s(Kind::kExplicitList);
  s.values_ = std::move(values);
  s.error_ = std::move(error_bound);
  return s;
}

SeqSpec SeqSpec::poly_in_n(Poly p) {
  SeqSpec s(Kind::kPolyInN);
  s.poly_ = std::move(p);
  return s;
}

SeqSpec SeqSpec::alt_poly_in_n(Poly p) {
  SeqSpec s(Kind::kAltPolyInN);
  s.poly_ = std::move(p);
  return s;
}

SeqSpec SeqSpec::geometric(Rational ratio) {
  SeqSpec s(Kind::kGeometric);
  s.ratio_ = std::move(ratio);
  return s;
}

SeqSpec SeqSpec::approx_pow(long num, long den, mpz_class precision) {
  if (num < 0 || den < 1) bad("pow exponent must be nonnegative");
  if (precision <= 0) bad("pow precision must be positive");
  SeqSpec s(Kind::kApproxPow);
  s.pow_num_ = num;
  s.pow_den_ = den;
  s.precision_ = std::move(precision);
  s.error_ = Rational(mpz_class(1), s.precision_);
  return s;
}

Rational SeqSpec::eval(long n) const {
  if (n < 0) throw std::out_of_range("sequence index must be nonnegative");
  switch (kind_) {
    case Kind::kExplicitList:
      if (n >= static_cast<long>(values_.size()))
        throw std::out_of_range("sequence entry " + std::to_string(n) +
                                " not provided by the list");
      return values_[static_cast<std::size_t>(n)];
    case Kind::kPolyInN:
      return poly_(Rational(n));
    case Kind::kAltPolyInN:
      return Rational(neg_one_pow(n)) * poly_(Rational(n));
    case Kind::kGeometric:
      return Rational::pow(ratio_, n);
    case Kind::kApproxPow: {
      // floor(((n^a) * P^b)^(1/b)) / P differs from n^{a/b} by at most 1/P.
      if (n == 0) return Rational(pow_num_ == 0 ? 1 : 0);
      mpz_class t = int_pow(mpz_class(n), pow_num_);
      t *= int_pow(precision_, pow_den_);
      mpz_class root;
      mpz_root(root.get_mpz_t(), t.get_mpz_t(),
               static_cast<unsigned long>(pow_den_));
      return Rational(root, precision_);
    }
  }
  bad("unknown kind");
}

long SeqSpec::max_index() const {
  if (kind_ == Kind::kExplicitList)
    return static_cast<long>(values_.size()) - 1;
  return std::numeric_limits<long>::max();
}

bool SeqSpec::is_trivial_ms() const {
  switch (kind_) {
    case Kind::kExplicitList: {
      long first = -1, last = -1;
      for (long i = 0; i < static_cast<long>(values_.size()); ++i) {
        if (values_[static_cast<std::size_t>(i)].is_zero()) continue;
        if (first < 0) first = i;
        last = i;
      }
      return first < 0 || last - first <= 1;
    }
    case Kind::kPolyInN:
    case Kind::kAltPolyInN:
      return poly_.is_zero();
    case Kind::kGeometric:
      return ratio_.is_zero();  // {1, 0, 0, ...}
    case Kind::kApproxPow:
      return false;  // 0, 1, 2^q, ... has infinitely many nonzero entries
  }
  return false;
}

const Poly& SeqSpec::poly() const {
  if (kind_ != Kind::kPolyInN && kind_ != Kind::kAltPolyInN)
    throw std::logic_error("sequence is not polynomial-based");
  return poly_;
}

const std::vector<Rational>& SeqSpec::values() const {
  if (kind_ != Kind::kExplicitList)
    throw std::logic_error("sequence is not an explicit list");
  return values_;
}

const Rational& SeqSpec::ratio() const {
  if (kind_ != Kind::kGeometric)
    throw std::logic_error("sequence is not geometric");
  return ratio_;
}

std::string SeqSpec::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kExplicitList: {
      os << "list:";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ",";
        os << values_[i].str();
      }
      break;
    }
    case Kind::kPolyInN:
      os << "poly:" << poly_.str("n");
      break;
    case Kind::kAltPolyInN:
      os << "altpoly:" << poly_.str("n");
      break;
    case Kind::kGeometric:
      os << "geom:" << ratio_.str();
      break;
    case Kind::kApproxPow:
      os << "pow:" << pow_num_ << "/" << pow_den_ << "@" << precision_.get_str();
      break;
  }
  return os.str();
}

SeqSpec sign_flipped(const SeqSpec& s, int order_hint) {
  switch (s.kind()) {
    case SeqSpec::Kind::kExplicitList: {
      std::vector<Rational> v = s.values();
      for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
      return SeqSpec::explicit_list(std::move(v), s.error_bound());
    }
    case SeqSpec::Kind::kPolyInN:
      return SeqSpec::alt_poly_in_n(s.poly());
    case SeqSpec::Kind::kAltPolyInN:
      return SeqSpec::poly_in_n(s.poly());
    case SeqSpec::Kind::kGeometric:
      return SeqSpec::geometric(-s.ratio());
    case SeqSpec::Kind::kApproxPow: {
      if (order_hint < 0)
        throw std::invalid_argument("order hint must be nonnegative");
      std::vector<Rational> v;
      v.reserve(static_cast<std::size_t>(order_hint) + 1);
      for (long n = 0; n <= order_hint; ++n)
        v.push_back(Rational(neg_one_pow(n)) * s.eval(n));
      return SeqSpec::explicit_list(std::move(v), s.error_bound());
    }
  }
  throw std::logic_error("unknown sequence kind");
}

namespace {

// Recursive-descent over: sum of terms; term = product of factors with
// optional '*'; factor = rational | n['^'uint].
class PolyInNParser {
 public:
  explicit PolyInNParser(std::string_view text) : t_(text) {}

  Poly parse() {
    Poly acc = sum();
    skip_ws();
    if (pos_ != t_.size()) bad("trailing characters in polynomial");
    return acc;
  }

 private:
  Poly sum() {
    skip_ws();
    int sign = 1;
    while (peek() == '+' || peek() == '-') {
      if (take() == '-') sign = -sign;
      skip_ws();
    }
    Poly acc = term() * Rational(sign);
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      int s = 1;
      while (peek() == '+' || peek() == '-') {
        if (take() == '-') s = -s;
        skip_ws();
      }
      acc += term() * Rational(s);
      skip_ws();
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    skip_ws();
    while (true) {
      if (peek() == '*') {
        take();
        skip_ws();
        acc *= factor();
        skip_ws();
      } else if (peek() == 'n' || std::isdigit(peek())) {
        acc *= factor();  // juxtaposition, e.g. "2n" or "1/2n^3"
        skip_ws();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor() {
    skip_ws();
    if (peek() == 'n') {
      take();
      long e = 1;
      if (peek() == '^') {
        take();
        e = integer();
        if (e < 0) bad("negative exponent");
      }
      return Poly::monomial(Rational(1), static_cast<int>(e));
    }
    if (std::isdigit(peek())) {
      const long num = integer();
      if (peek() == '/') {
        take();
        const long den = integer();
        if (den == 0) bad("zero denominator");
        return Poly::constant(Rational(num, den));
      }
      return Poly::constant(Rational(num));
    }
    bad("expected a coefficient or n");
  }

  long integer() {
    skip_ws();
    if (!std::isdigit(peek())) bad("expected digits");
    long v = 0;
    while (std::isdigit(peek())) {
      v = v * 10 + (take() - '0');
      if (v > 1'000'000'000) bad("integer literal too large");
    }
    return v;
  }

  void skip_ws() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_])))
      ++pos_;
  }
  int peek() const { return pos_ < t_.size() ? t_[pos_] : '\0'; }
  char take() { return t_[pos_++]; }
  [[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("malformed sequence spec: " + what + " in \"" +
                                std::string(t_) + "\"");
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

mpz_class parse_precision(std::string_view text) {
  // Plain integer or mantissa'e'exponent, e.g. "1e12".
  const auto epos = text.find_first_of("eE");
  if (epos == std::string_view::npos) {
    for (char c : text)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        bad("malformed precision");
    if (text.empty()) bad("empty precision");
    return mpz_class(std::string(text), 10);
  }
  const std::string mant(text.substr(0, epos));
  const std::string expo(text.substr(epos + 1));
  if (mant.empty() || expo.empty()) bad("malformed precision");
  for (char c : mant + expo)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      bad("malformed precision");
  return mpz_class(mant, 10) * int_pow(mpz_class(10), std::stol(expo));
}

}  // namespace

Poly parse_poly_in_n(std::string_view text) {
  return PolyInNParser(text).parse();
}

SeqSpec SeqSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    bad("expected kind:payload, e.g. poly:n^2+n+1");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view payload = text.substr(colon + 1);
  if (kind == "list") {
    std::vector<Rational> values;
    std::size_t start = 0;
    while (start <= payload.size()) {
      auto comma = payload.find(',', start);
      if (comma == std::string_view::npos) comma = payload.size();
      values.push_back(
          Rational::from_string(payload.substr(start, comma - start)));
      start = comma + 1;
    }
    return explicit_list(std::move(values));
  }
  if (kind == "poly") return poly_in_n(parse_poly_in_n(payload));
  if (kind == "altpoly") return alt_poly_in_n(parse_poly_in_n(payload));
  if (kind == "geom") return geometric(Rational::from_string(payload));
  if (kind == "pow") {
    const auto at = payload.find('@');
    const std::string_view expo =
        at == std::string_view::npos ? payload : payload.substr(0, at);
    mpz_class precision = int_pow(mpz_class(10), 12);
    if (at != std::string_view::npos)
      precision = parse_precision(payload.substr(at + 1));
    const auto slash = expo.find('/');
    long num = 0, den = 1;
    try {
      if (slash == std::string_view::npos) {
        num = std::stol(std::string(expo));
      } else {
        num = std::stol(std::string(expo.substr(0, slash)));
        den = std::stol(std::string(expo.substr(slash + 1)));
      }
    } catch (const std::exception&) {
      bad("malformed pow exponent");
    }
    return approx_pow(num, den, std::move(precision));
  }
  bad("unknown kind \"" + std::string(kind) + "\"");
}

}  // namespace hypercore
