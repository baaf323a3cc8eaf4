#pragma once

#include <map>
#include <vector>

#include "hypercore/diffop.hpp"
#include "hypercore/poly.hpp"
#include "hypercore/rational.hpp"

namespace hypercore {

/// Rewriting of an operator as sum_n T_n D^n where each T_n is a classical
/// diagonal operator T_n[x^k] = b_{n,k} x^k. Negative n appear exactly when
/// some deg(Q_k) > k; identically-zero rows are omitted. Rows are stored to
/// index `order`, chosen large enough that the decomposition reconstructs
/// the original operator exactly.
class TnDecomposition {
 public:
  TnDecomposition(std::map<int, std::vector<Rational>> rows, int order,
                  int op_order);

  const std::map<int, std::vector<Rational>>& rows() const { return rows_; }
  /// Eigenvalue row of T_n; all zeros when absent.
  std::vector<Rational> row(int n) const;
  bool has_row(int n) const { return rows_.count(n) != 0; }
  /// Largest stored eigenvalue index per row.
  int order() const { return order_; }
  /// Declared order of the operator the decomposition came from.
  int op_order() const { return op_order_; }
  int min_index() const;
  int max_index() const;

  bool operator==(const TnDecomposition&) const = default;

 private:
  std::map<int, std::vector<Rational>> rows_;
  int order_;
  int op_order_;
};

/// b_{n,k} = sum_{j<=k} C(k,j) Q_{j+n}^{(j)}(0) for k = 0..order, with
/// Q_m = 0 outside the stored terms (in particular for m < 0).
std::vector<Rational> tn_eigenvalues(const DiffOp& t, int n, int order);

/// T_n itself in x^k D^k form: its k-th term is Q_{k+n}^{(k)}(0)/k! x^k.
DiffOp tn_operator_terms(const DiffOp& t, int n);

TnDecomposition decompose(const DiffOp& t);

DiffOp reconstruct(const TnDecomposition& d);

}  // namespace hypercore
