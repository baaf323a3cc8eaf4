#include "hypercore/basis.hpp"

#include <sstream>
#include <stdexcept>

#include "hypercore/numeric.hpp"

namespace hypercore {

Poly hermite_poly(int n) {
  if (n < 0) throw std::invalid_argument("negative basis index");
  // H_n(x) = sum_{k<=n/2} (-1)^k n! 2^{n-2k} / (k! (n-2k)!) x^{n-2k}
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  const mpz_class nf = factorial(n);
  for (int k = 0; 2 * k <= n; ++k) {
    const mpz_class num =
        nf * int_pow(mpz_class(2), n - 2 * k) * neg_one_pow(k);
    const mpz_class den = factorial(k) * factorial(n - 2 * k);
    c[static_cast<std::size_t>(n - 2 * k)] = Rational(num, den);
  }
  return Poly(std::move(c));
}

Poly laguerre_poly(int n) {
  if (n < 0) throw std::invalid_argument("negative basis index");
  // L_n(x) = sum_k (-1)^k / k! C(n,k) x^k
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    c[static_cast<std::size_t>(k)] =
        Rational(binomial(n, k) * neg_one_pow(k), factorial(k));
  }
  return Poly(std::move(c));
}

Poly legendre_poly(int n) {
  if (n < 0) throw std::invalid_argument("negative basis index");
  // P_n(x) = sum_{k<=n/2} (-1)^k / 2^n C(n,k) C(2n-2k,n) x^{n-2k}
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  const mpz_class two_n = int_pow(mpz_class(2), n);
  for (int k = 0; 2 * k <= n; ++k) {
    const mpz_class num =
        binomial(n, k) * binomial(2 * n - 2 * k, n) * neg_one_pow(k);
    c[static_cast<std::size_t>(n - 2 * k)] = Rational(num, two_n);
  }
  return Poly(std::move(c));
}

Poly hermite_imag(int m) {
  if (m < 0) throw std::invalid_argument("negative basis index");
  // i^m H_m(ix) = (-1)^m sum_{k<=m/2} m! 2^{m-2k} / (k! (m-2k)!) x^{m-2k}
  std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
  const mpz_class mf = factorial(m);
  for (int k = 0; 2 * k <= m; ++k) {
    const mpz_class num =
        mf * int_pow(mpz_class(2), m - 2 * k) * neg_one_pow(m);
    const mpz_class den = factorial(k) * factorial(m - 2 * k);
    c[static_cast<std::size_t>(m - 2 * k)] = Rational(num, den);
  }
  return Poly(std::move(c));
}

Basis::Basis(BasisKind kind, Rational scale, Rational shift) : kind_(kind) {
  if (scale.is_zero())
    throw std::invalid_argument("affine basis requires scale != 0");
  if (scale == Rational(1) && shift.is_zero()) return;  // plain basis
  affine_ = {std::move(scale), std::move(shift)};
}

Basis Basis::parse(std::string_view name) {
  if (name == "monomial") return Basis(BasisKind::kMonomial);
  if (name == "hermite") return Basis(BasisKind::kHermite);
  if (name == "laguerre") return Basis(BasisKind::kLaguerre);
  if (name == "legendre") return Basis(BasisKind::kLegendre);
  throw std::invalid_argument("unknown basis \"" + std::string(name) +
                              "\" (want hermite|laguerre|legendre|monomial)");
}

const Rational& Basis::scale() const {
  static const Rational one(1);
  return affine_ ? affine_->first : one;
}

const Rational& Basis::shift() const {
  static const Rational zero;
  return affine_ ? affine_->second : zero;
}

Poly Basis::poly(int n) const {
  if (n < 0) throw std::invalid_argument("negative basis index");
  Poly p;
  switch (kind_) {
    case BasisKind::kMonomial:
      p = Poly::monomial(Rational(1), n);
      break;
    case BasisKind::kHermite:
      p = hermite_poly(n);
      break;
    case BasisKind::kLaguerre:
      p = laguerre_poly(n);
      break;
    case BasisKind::kLegendre:
      p = legendre_poly(n);
      break;
  }
  if (affine_) p = p.compose_affine(affine_->first, affine_->second);
  return p;
}

Rational Basis::deriv_at_zero(int n, int k) const {
  if (n < 0 || k < 0) throw std::invalid_argument("negative index");
  if (has_affine())
    throw std::invalid_argument(
        "derivative-at-zero closed forms require a plain basis");
  switch (kind_) {
    case BasisKind::kHermite: {
      if (k > n || (n - k) % 2 != 0) return Rational(0);
      const long j = (n - k) / 2;
      // H_{k+2j}^{(k)}(0) = (k+2j)! 2^k (-1)^j / j!
      return Rational(factorial(n) * int_pow(mpz_class(2), k) * neg_one_pow(j),
                      factorial(j));
    }
    case BasisKind::kLaguerre:
      // L_n^{(k)}(0) = C(n,k) (-1)^k
      return Rational(binomial(n, k) * neg_one_pow(k));
    case BasisKind::kMonomial:
    case BasisKind::kLegendre:
      return poly(n).derivative(k)(Rational(0));
  }
  throw std::logic_error("unknown basis kind");
}

std::vector<Rational> Basis::expand(const Poly& p) const {
  if (p.is_zero()) return {};
  std::vector<Rational> c(static_cast<std::size_t>(p.degree()) + 1);
  Poly rem = p;
  for (int d = p.degree(); d >= 0; --d) {
    if (rem.degree() < d) continue;
    const Poly bd = poly(d);
    const Rational cd = rem.coeff(d) / bd.leading();
    c[static_cast<std::size_t>(d)] = cd;
    rem -= bd * cd;
  }
  if (!rem.is_zero())
    throw std::logic_error("change of basis failed to triangularize");
  return c;
}

std::string Basis::str() const {
  std::ostringstream os;
  switch (kind_) {
    case BasisKind::kMonomial: os << "monomial"; break;
    case BasisKind::kHermite: os << "hermite"; break;
    case BasisKind::kLaguerre: os << "laguerre"; break;
    case BasisKind::kLegendre: os << "legendre"; break;
  }
  if (affine_) {
    os << "(" << affine_->first.str() << "x";
    if (affine_->second.sign() >= 0) os << "+";
    os << affine_->second.str() << ")";
  }
  return os.str();
}

}  // namespace hypercore
