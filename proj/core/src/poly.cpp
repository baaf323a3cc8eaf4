#include "hypercore/poly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hypercore {

namespace {
const Rational kZero{};
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(Rational c) {
  std::vector<Rational> v;
  if (!c.is_zero()) v.push_back(std::move(c));
  return Poly(std::move(v));
}

Poly Poly::monomial(Rational c, int k) {
  if (k < 0) throw std::invalid_argument("monomial with negative degree");
  if (c.is_zero()) return Poly();
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = std::move(c);
  return Poly(std::move(v));
}

Poly Poly::x() { return monomial(Rational(1), 1); }

const Rational& Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(k)];
}

const Rational& Poly::leading() const {
  if (is_zero()) throw std::invalid_argument("zero polynomial has no leading coefficient");
  return c_.back();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k)
    d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::derivative(int k) const {
  if (k < 0) throw std::invalid_argument("negative derivative order");
  Poly p = *this;
  for (int i = 0; i < k && !p.is_zero(); ++i) p = p.derivative();
  return p;
}

Rational Poly::operator()(const Rational& at) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::compose_affine(const Rational& alpha, const Rational& beta) const {
  if (alpha.is_zero())
    throw std::invalid_argument("compose_affine requires alpha != 0");
  const Poly lin({beta, alpha});
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * lin + constant(*it);
  return acc;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Poly acc = constant(Rational(1));
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  }
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Rational& s) {
  if (s.is_zero()) return Poly();
  Poly r = a;
  for (auto& c : r.c_) c *= s;
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Poly rem = a;
  if (a.degree() < b.degree()) return {Poly(), rem};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const Rational f = rem.leading() / b.leading();
    q[static_cast<std::size_t>(shift)] = f;
    rem -= monomial(f, shift) * b;
  }
  return {Poly(std::move(q)), rem};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly u = a, v = b;
  while (!v.is_zero()) {
    Poly r = divmod(u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  if (u.is_zero()) return u;
  return u * (Rational(1) / u.leading());
}

std::vector<Poly> Poly::squarefree_factors() const {
  if (is_zero())
    throw std::invalid_argument("square-free factorization of zero polynomial");
  std::vector<Poly> out;
  if (degree() == 0) return out;
  // Musser's chain: g = gcd(p, p') collects repeated parts, w the distinct ones.
  Poly g = gcd(*this, derivative());
  Poly w = divmod(*this, g).first;
  w = w * (Rational(1) / w.leading());
  while (w.degree() > 0) {
    Poly y = gcd(w, g);
    out.push_back(divmod(w, y).first);
    w = std::move(y);
    g = divmod(g, w).first;
  }
  return out;
}

Poly Poly::squarefree_part() const {
  if (is_zero())
    throw std::invalid_argument("square-free part of zero polynomial");
  if (degree() == 0) return constant(Rational(1));
  const Poly g = gcd(*this, derivative());
  Poly w = divmod(*this, g).first;
  return w * (Rational(1) / w.leading());
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeff(k);
    if (c.is_zero()) continue;
    const Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = (a == Rational(1));
    if (k == 0) {
      os << a.str();
    } else {
      if (!unit) os << a.str() << (a.is_integer() ? "" : " ");
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << p.str();
}

}  // namespace hypercore
