#include "hypercore/hermite.hpp"

#include <stdexcept>

#include "hypercore/jensen.hpp"
#include "hypercore/numeric.hpp"

namespace hypercore {
namespace hermite {

namespace {

void require_plain_hermite(const Basis& b) {
  if (b.kind() != BasisKind::kHermite || b.has_affine())
    throw std::invalid_argument(
        "closed form is stated for the plain Hermite basis only");
}

}  // namespace

Poly qk_hermite_combination(const Basis& b, const SeqSpec& s, int k) {
  require_plain_hermite(b);
  if (k < 0) throw std::invalid_argument("negative term index");
  Poly out;
  for (int j = 0; 2 * j <= k; ++j) {
    const Rational w(neg_one_pow(j),
                     factorial(j) * factorial(k - 2 * j) *
                         int_pow(mpz_class(2), k - j));
    out += hermite_poly(k - 2 * j) * (w * reversed_jensen_at_minus1(s, k - j));
  }
  return out;
}

Poly qk_monomial_sum(const Basis& b, const SeqSpec& s, int m) {
  require_plain_hermite(b);
  if (m < 0) throw std::invalid_argument("negative term index");
  Poly out;
  for (int k = 0; 2 * k <= m; ++k) {
    Rational inner;
    for (int j = 0; j <= k; ++j)
      inner += Rational(binomial(k, j), int_pow(mpz_class(2), j)) *
               reversed_jensen_at_minus1(s, m - k + j);
    const Rational w(neg_one_pow(k),
                     factorial(k) * int_pow(mpz_class(2), k) *
                         factorial(m - 2 * k));
    out += Poly::monomial(w * inner, m - 2 * k);
  }
  return out;
}

Poly qk_imaginary_pairing(const Basis& b, const SeqSpec& s, int n) {
  require_plain_hermite(b);
  if (n < 0) throw std::invalid_argument("negative term index");
  Poly out;
  for (int k = 0; k <= n; ++k) {
    const Rational c = Rational(binomial(n, k)) * s.eval(k);
    if (c.is_zero()) continue;
    out += hermite_imag(n - k) * hermite_poly(k) * c;
  }
  return out * Rational(mpz_class(1), factorial(n) * int_pow(mpz_class(2), n));
}

Rational bnk(const SeqSpec& s, int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("negative index");
  const std::vector<Rational> g = gstar_values(s, m + 2 * n);
  const Rational lead(neg_one_pow(n), factorial(n) * int_pow(mpz_class(2), n));
  Rational acc;
  for (int k = 0; k <= m; ++k) {
    Rational inner;
    for (int j = 0; j <= n; ++j)
      inner += Rational(binomial(n, j), int_pow(mpz_class(2), j)) *
               g[static_cast<std::size_t>(k + n + j)];
    acc += Rational(binomial(m, k)) * lead * inner;
  }
  return acc;
}

namespace {

TruncSeries hn_at_order(const SeqSpec& s, int n, int budget) {
  // f = e^{-x} sum gamma_k x^k / k!
  TruncSeries h =
      series_from_sequence(s, SeriesWeight::kTaylor, budget).exp_mul(-1);
  for (int i = 1; i <= n; ++i) {
    h = h.exp_mul(2).derivative().exp_mul(-2).derivative() *
        Rational(-1, 4 * i);
  }
  return h;
}

}  // namespace

TruncSeries hn(const SeqSpec& s, int n, int budget_order) {
  if (n < 0) throw std::invalid_argument("negative row index");
  if (budget_order < 2 * n)
    throw std::invalid_argument(
        "series order budget too small: the derivative chain consumes 2 "
        "orders per step");
  const TruncSeries h = hn_at_order(s, n, budget_order);
  // The chain only ever shifts coefficients downward; recompute with slack
  // and compare so a truncation bug cannot corrupt comparisons silently.
  const TruncSeries check = hn_at_order(s, n, budget_order + 8);
  if (check.truncated(h.order()) != h)
    throw std::logic_error("series truncation instability detected");
  return h;
}

DiffOp alternate(const DiffOp& t) {
  if (!t.diagonal_degree_bound())
    throw std::invalid_argument(
        "expected the expansion of a diagonal operator (deg Q_k <= k)");
  std::map<int, Poly> out;
  for (int n = 0; n <= t.order(); ++n) {
    // (-2)^n/n! sum_k Q_k/2^k (x^n)^{(k)}
    Poly qt;
    for (const auto& [k, qk] : t.terms()) {
      if (k > n) break;
      qt += qk * Rational(falling_factorial(n, k),
                          int_pow(mpz_class(2), k)) *
            Poly::monomial(Rational(1), n - k);
    }
    qt *= Rational(int_pow(mpz_class(-2), n), factorial(n));
    if (!qt.is_zero()) out.emplace(n, std::move(qt));
  }
  return DiffOp(std::move(out), t.order());
}

TruncSeries edge_series(const SeqSpec& s, bool plus, int order) {
  const TruncSeries f =
      series_from_sequence(s, SeriesWeight::kTaylor, order + 1);
  const TruncSeries fp = f.derivative();
  const TruncSeries combo = plus ? fp + f : fp - f;
  return combo.exp_mul(-1).truncated(order);
}

}  // namespace hermite
}  // namespace hypercore
