#include "hypercore/laguerre.hpp"

#include <stdexcept>

#include "hypercore/jensen.hpp"
#include "hypercore/numeric.hpp"

namespace hypercore {
namespace laguerre {

namespace {

void require_plain_laguerre(const Basis& b) {
  if (b.kind() != BasisKind::kLaguerre || b.has_affine())
    throw std::invalid_argument(
        "closed form is stated for the plain Laguerre basis only");
}

}  // namespace

Poly qk_jensen_form(const Basis& b, const SeqSpec& s, int n) {
  require_plain_laguerre(b);
  if (n < 0) throw std::invalid_argument("negative term index");
  const std::vector<Rational> g = gstar_values(s, n);
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  Rational fact(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= Rational(k);
    Rational deriv;  // Q_n^{(k)}(0)
    for (int p = 0; p <= n; ++p) {
      const mpz_class w =
          binomial(n - k, p - k) * binomial(p, n - k) * neg_one_pow(n - k);
      if (w != 0) deriv += Rational(w) * g[static_cast<std::size_t>(p)];
    }
    c[static_cast<std::size_t>(k)] = deriv / fact;
  }
  return Poly(std::move(c));
}

Poly qk_basis_form(const Basis& b, const SeqSpec& s, int n) {
  require_plain_laguerre(b);
  if (n < 0) throw std::invalid_argument("negative term index");
  Poly out;
  Rational fact(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= Rational(k);
    Poly inner;
    for (int j = 0; j <= n - k; ++j) {
      const Rational c =
          Rational(binomial(n - k, j) * neg_one_pow(j)) * s.eval(j);
      if (!c.is_zero()) inner += laguerre_poly(j) * c;
    }
    out += Poly::monomial(Rational(neg_one_pow(k)) / fact, k) * inner;
  }
  return out;
}

Rational bnm(const SeqSpec& s, int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("negative index");
  const std::vector<Rational> g = gstar_values(s, m + n);
  const Rational lead(neg_one_pow(n), factorial(n));
  Rational acc;
  for (int k = 0; k <= m; ++k) {
    Rational inner;
    for (int j = 0; j <= n; ++j) {
      const mpz_class ff = falling_factorial(k + j, n);
      if (ff != 0)
        inner += Rational(binomial(n, j) * ff) *
                 g[static_cast<std::size_t>(k + j)];
    }
    acc += Rational(binomial(m, k)) * lead * inner;
  }
  return acc;
}

Poly hn(const SeqSpec& s, int n) {
  if (n < 0) throw std::invalid_argument("negative row index");
  std::optional<Poly> f;
  try {
    f = gstar_polynomial(s);
  } catch (const std::domain_error& e) {
    throw std::domain_error(std::string("h_n needs a polynomial f: ") +
                            e.what());
  }
  if (!f)
    throw std::domain_error(
        "h_n needs a polynomial f, but sum g_k*(-1) x^k has infinitely many "
        "nonzero terms for this sequence");
  if (f->is_zero()) return Poly();
  const Poly one_plus_x({Rational(1), Rational(1)});
  return one_plus_x.pow(n) * f->derivative(n) *
         Rational(neg_one_pow(n), factorial(n));
}

std::pair<Rational, Rational> identity_horrible(long n, long m, long p) {
  mpz_class lhs = 0;
  for (long k = 0; k <= n; ++k) {
    for (long j = 0; j <= m; ++j) {
      lhs += binomial(m, j) * binomial(k - j, p - j) * binomial(p, k - j) *
             binomial(n + 1, k + m - j);
    }
  }
  const mpz_class rhs = binomial(n + 1, p) * binomial(n + 1, m) -
                        binomial(n + 1 - m, p - m) * binomial(p, n + 1 - m);
  return {Rational(lhs), Rational(rhs)};
}

}  // namespace laguerre
}  // namespace hypercore
