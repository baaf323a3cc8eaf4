#include "hypercore/diffop.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hypercore/numeric.hpp"

namespace hypercore {

namespace {
const Poly kZeroPoly{};
}

DiffOp::DiffOp(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("negative operator order");
}

DiffOp::DiffOp(std::map<int, Poly> terms, int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("negative operator order");
  for (auto& [k, q] : terms) {
    if (k < 0) throw std::invalid_argument("negative derivative index");
    if (k > order)
      throw std::invalid_argument("term D^" + std::to_string(k) +
                                  " beyond the declared order");
    if (!q.is_zero()) terms_.emplace(k, std::move(q));
  }
}

DiffOp DiffOp::identity(int order) {
  return DiffOp({{0, Poly::constant(Rational(1))}}, order);
}

const Poly& DiffOp::q(int k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? kZeroPoly : it->second;
}

DiffOp DiffOp::with_order(int order) const {
  return DiffOp(terms_, order);
}

bool DiffOp::diagonal_degree_bound() const {
  for (const auto& [k, q] : terms_)
    if (q.degree() > k) return false;
  return true;
}

Poly DiffOp::apply(const Poly& p) const {
  if (p.degree() > order_)
    throw std::invalid_argument(
        "operand degree " + std::to_string(p.degree()) +
        " exceeds the operator order " + std::to_string(order_) +
        "; the truncation could be lossy");
  Poly out;
  Poly dp = p;
  int at = 0;
  for (const auto& [k, qk] : terms_) {
    if (k > p.degree()) break;
    while (at < k) {
      dp = dp.derivative();
      ++at;
    }
    out += qk * dp;
  }
  return out;
}

std::string DiffOp::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, qk] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << qk.str() << ")";
    if (k == 1) os << "D";
    if (k > 1) os << "D^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DiffOp& t) {
  return os << t.str();
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  // D^i (Q D^j) = sum_l C(i,l) Q^{(l)} D^{i+j-l}
  std::map<int, Poly> out;
  for (const auto& [i, qa] : a.terms()) {
    for (const auto& [j, qb] : b.terms()) {
      Poly dq = qb;
      for (int l = 0; l <= i && !dq.is_zero(); ++l) {
        const Poly contrib = qa * dq * Rational(binomial(i, l));
        if (!contrib.is_zero()) {
          auto [it, inserted] = out.try_emplace(i + j - l, contrib);
          if (!inserted) it->second += contrib;
        }
        dq = dq.derivative();
      }
    }
  }
  return DiffOp(std::move(out), a.order() + b.order());
}

DiffOp compose(const DiffOp& a, const DiffOp& b, int max_order) {
  if (a.order() + b.order() > max_order)
    throw std::invalid_argument("composition order " +
                                std::to_string(a.order() + b.order()) +
                                " overflows the configured bound " +
                                std::to_string(max_order));
  return compose(a, b);
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  std::map<int, Poly> out = a.terms();
  for (const auto& [k, q] : b.terms()) {
    auto [it, inserted] = out.try_emplace(k, q);
    if (!inserted) it->second += q;
  }
  return DiffOp(std::move(out), std::max(a.order(), b.order()));
}

DiffOp peetre_expand_action(const Basis& b, const std::vector<Poly>& images,
                            int order) {
  if (order < 0) throw std::invalid_argument("negative expansion order");
  if (static_cast<int>(images.size()) < order + 1)
    throw std::invalid_argument("need images of B_0..B_order");
  std::vector<Poly> q(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    const Poly bn = b.poly(n);
    Poly rhs = images[static_cast<std::size_t>(n)];
    Poly dbn = bn;
    for (int k = 0; k < n; ++k) {
      rhs -= q[static_cast<std::size_t>(k)] * dbn;
      dbn = dbn.derivative();
    }
    // dbn is now B_n^{(n)}, the constant n! * lead(B_n).
    q[static_cast<std::size_t>(n)] = rhs * (Rational(1) / dbn.coeff(0));
  }
  std::map<int, Poly> terms;
  for (int n = 0; n <= order; ++n)
    if (!q[static_cast<std::size_t>(n)].is_zero())
      terms.emplace(n, std::move(q[static_cast<std::size_t>(n)]));
  return DiffOp(std::move(terms), order);
}

DiffOp peetre_expand(const Basis& b, const SeqSpec& s, int order) {
  if (order < 0) throw std::invalid_argument("negative expansion order");
  std::vector<Poly> images;
  images.reserve(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) images.push_back(b.poly(n) * s.eval(n));
  return peetre_expand_action(b, images, order);
}

}  // namespace hypercore
