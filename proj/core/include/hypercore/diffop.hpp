#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hypercore/basis.hpp"
#include "hypercore/poly.hpp"
#include "hypercore/seqspec.hpp"

namespace hypercore {

/// Finite-order differential operator sum_k Q_k(x) D^k, stored sparsely
/// by k with each Q_k dense. The order is the declared validity bound:
/// applying the operator to polynomials of degree <= order is exact even
/// when the operator is a truncation of an infinite-order one.
class DiffOp {
 public:
  explicit DiffOp(int order);
  DiffOp(std::map<int, Poly> terms, int order);

  static DiffOp identity(int order);

  int order() const { return order_; }
  const std::map<int, Poly>& terms() const { return terms_; }
  /// Q_k; the zero polynomial outside the stored support.
  const Poly& q(int k) const;
  bool is_zero() const { return terms_.empty(); }

  /// Same terms with a new validity bound (>= the largest stored k).
  /// Lifting the bound asserts that the operator is complete, not a
  /// truncation.
  DiffOp with_order(int order) const;

  /// deg(Q_k) <= k for every stored term; all diagonal expansions have it.
  bool diagonal_degree_bound() const;

  /// sum_k Q_k p^{(k)}, exact. Rejects deg(p) > order since a truncated
  /// operator could silently drop terms there.
  Poly apply(const Poly& p) const;

  bool operator==(const DiffOp&) const = default;

  /// "(x)D + (-1/2)D^2" style.
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const DiffOp& t);

 private:
  std::map<int, Poly> terms_;
  int order_;
};

/// a o b by the Leibniz rule; order adds.
DiffOp compose(const DiffOp& a, const DiffOp& b);

/// a o b, rejecting results beyond max_order.
DiffOp compose(const DiffOp& a, const DiffOp& b, int max_order);

DiffOp operator+(const DiffOp& a, const DiffOp& b);

/// Unique differential representation of the diagonal action
/// T[B_n] = gamma_n B_n, truncated at the given order: Q_0..Q_order from
/// the triangular recursion
///   Q_n = (T[B_n] - sum_{k<n} Q_k B_n^{(k)}) / B_n^{(n)}.
DiffOp peetre_expand(const Basis& b, const SeqSpec& s, int order);

/// Same recursion for an arbitrary action given by the images of
/// B_0..B_order.
DiffOp peetre_expand_action(const Basis& b, const std::vector<Poly>& images,
                            int order);

}  // namespace hypercore
