#include "hypercore/jensen.hpp"

#include <stdexcept>

#include "hypercore/numeric.hpp"

namespace hypercore {

Poly jensen_poly(const SeqSpec& s, int n) {
  if (n < 0) throw std::invalid_argument("negative Jensen index");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    c[static_cast<std::size_t>(k)] = Rational(binomial(n, k)) * s.eval(k);
  return Poly(std::move(c));
}

Rational reversed_jensen_at_minus1(const SeqSpec& s, int n) {
  if (n < 0) throw std::invalid_argument("negative Jensen index");
  Rational acc;
  for (int k = 0; k <= n; ++k)
    acc += Rational(binomial(n, k) * neg_one_pow(n - k)) * s.eval(k);
  return acc;
}

std::vector<Rational> gstar_values(const SeqSpec& s, int upto) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(upto) + 1);
  for (int n = 0; n <= upto; ++n) out.push_back(reversed_jensen_at_minus1(s, n));
  return out;
}

std::vector<Rational> binomial_transform(const std::vector<Rational>& alpha) {
  std::vector<Rational> beta(alpha.size());
  for (std::size_t n = 0; n < alpha.size(); ++n) {
    Rational acc;
    for (std::size_t k = 0; k <= n; ++k)
      acc += Rational(binomial(static_cast<long>(n), static_cast<long>(k))) *
             alpha[k];
    beta[n] = acc;
  }
  return beta;
}

std::vector<Rational> inverse_binomial_transform(
    const std::vector<Rational>& beta) {
  std::vector<Rational> alpha(beta.size());
  for (std::size_t n = 0; n < beta.size(); ++n) {
    Rational acc;
    for (std::size_t k = 0; k <= n; ++k)
      acc += Rational(binomial(static_cast<long>(n), static_cast<long>(k)) *
                      neg_one_pow(static_cast<long>(n - k))) *
             beta[k];
    alpha[n] = acc;
  }
  return alpha;
}

DiffOp classical_diag_op(const SeqSpec& s, int order) {
  if (order < 0) throw std::invalid_argument("negative operator order");
  std::map<int, Poly> terms;
  Rational fact(1);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) fact *= Rational(k);
    const Rational g = reversed_jensen_at_minus1(s, k);
    if (!g.is_zero()) terms.emplace(k, Poly::monomial(g / fact, k));
  }
  return DiffOp(std::move(terms), order);
}

std::optional<Poly> gstar_polynomial(const SeqSpec& s) {
  switch (s.kind()) {
    case SeqSpec::Kind::kPolyInN: {
      // Finite differences of a degree-d polynomial sequence vanish past d.
      const int d = std::max(s.poly().degree(), 0);
      std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
      for (int k = 0; k <= d; ++k)
        c[static_cast<std::size_t>(k)] = reversed_jensen_at_minus1(s, k);
      return Poly(std::move(c));
    }
    case SeqSpec::Kind::kAltPolyInN:
      // g_n*(-1) = (-1)^n sum_k C(n,k) p(k), nonzero for all large n
      // unless p vanishes identically.
      if (s.poly().is_zero()) return Poly();
      return std::nullopt;
    case SeqSpec::Kind::kGeometric:
      // g_n*(-1) = (r - 1)^n.
      if (s.ratio() == Rational(1)) return Poly::constant(Rational(1));
      return std::nullopt;
    case SeqSpec::Kind::kExplicitList:
      throw std::domain_error(
          "a finite list does not determine whether f is a polynomial");
    case SeqSpec::Kind::kApproxPow:
      throw std::domain_error(
          "approximate sequences do not determine f exactly");
  }
  throw std::logic_error("unknown sequence kind");
}

}  // namespace hypercore
