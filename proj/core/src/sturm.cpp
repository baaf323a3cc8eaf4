#include "hypercore/sturm.hpp"

#include <stdexcept>
#include <vector>

namespace hypercore {

namespace {

// Standard chain: p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k).
std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  Poly d = p.derivative();
  while (!d.is_zero()) {
    chain.push_back(d);
    Poly r = -Poly::divmod(chain[chain.size() - 2], chain.back()).second;
    d = std::move(r);
  }
  return chain;
}

int sign_at(const Poly& q, const SturmBound& b) {
  if (q.is_zero()) return 0;
  if (b.finite()) return q(b.value()).sign();
  const int lead = q.leading().sign();
  if (b.is_pos_inf()) return lead;
  return (q.degree() % 2 == 0) ? lead : -lead;
}

long variations(const std::vector<Poly>& chain, const SturmBound& b) {
  long v = 0;
  int prev = 0;
  for (const Poly& q : chain) {
    const int s = sign_at(q, b);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

bool bound_leq(const SturmBound& a, const SturmBound& b) {
  if (a.is_neg_inf() || b.is_pos_inf()) return true;
  if (a.is_pos_inf() || b.is_neg_inf()) return false;
  return a.value() <= b.value();
}

}  // namespace

long sturm_count(const Poly& p, const SturmBound& lo, const SturmBound& hi) {
  if (p.is_zero())
    throw std::invalid_argument("sturm_count on the zero polynomial");
  if (!bound_leq(lo, hi)) return 0;
  if (lo.finite() && hi.finite() && lo.value() == hi.value()) return 0;

  Poly q = p.squarefree_part();
  long extra = 0;
  // Deflate endpoint roots so the variation difference applies cleanly;
  // the right endpoint belongs to the interval, the left does not.
  if (hi.finite() && q(hi.value()).is_zero()) {
    extra = 1;
    q = Poly::divmod(q, Poly({-hi.value(), Rational(1)})).first;
  }
  if (lo.finite() && !q.is_zero() && q(lo.value()).is_zero()) {
    q = Poly::divmod(q, Poly({-lo.value(), Rational(1)})).first;
  }
  if (q.degree() <= 0) return extra;

  const std::vector<Poly> chain = sturm_chain(q);
  return variations(chain, lo) - variations(chain, hi) + extra;
}

bool is_hyperbolic(const Poly& p) {
  if (p.is_zero())
    throw std::invalid_argument("is_hyperbolic on the zero polynomial");
  if (p.degree() == 0) return true;
  for (const Poly& s : p.squarefree_factors()) {
    if (s.degree() <= 0) continue;
    if (sturm_count(s, SturmBound::neg_inf(), SturmBound::pos_inf()) !=
        s.degree())
      return false;
  }
  return true;
}

bool roots_in_closed_interval(const Poly& p, const Rational& lo,
                              const Rational& hi) {
  if (p.is_zero())
    throw std::invalid_argument(
        "roots_in_closed_interval on the zero polynomial");
  if (lo > hi) throw std::invalid_argument("interval with lo > hi");
  if (!is_hyperbolic(p)) return false;
  if (p.degree() == 0) return true;
  // (-inf, lo] minus a root exactly at lo, plus everything right of hi.
  long left = sturm_count(p, SturmBound::neg_inf(), SturmBound::at(lo));
  if (p(lo).is_zero()) --left;
  const long right = sturm_count(p, SturmBound::at(hi), SturmBound::pos_inf());
  return left == 0 && right == 0;
}

}  // namespace hypercore
