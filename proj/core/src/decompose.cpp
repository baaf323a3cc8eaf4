#include "hypercore/decompose.hpp"

#include <algorithm>
#include <stdexcept>

#include "hypercore/jensen.hpp"
#include "hypercore/numeric.hpp"

namespace hypercore {

namespace {

// Q_m^{(j)}(0) = j! * [x^j] Q_m.
Rational deriv_at_zero(const DiffOp& t, int m, int j) {
  return t.q(m).coeff(j) * Rational(factorial(j));
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

}  // namespace

TnDecomposition::TnDecomposition(std::map<int, std::vector<Rational>> rows,
                                 int order, int op_order)
    : rows_(std::move(rows)), order_(order), op_order_(op_order) {
  if (order < 0 || op_order < 0)
    throw std::invalid_argument("negative decomposition order");
  for (const auto& [n, row] : rows_) {
    if (static_cast<int>(row.size()) != order + 1)
      throw std::invalid_argument("row length must be order + 1");
    (void)n;
  }
}

std::vector<Rational> TnDecomposition::row(int n) const {
  const auto it = rows_.find(n);
  if (it != rows_.end()) return it->second;
  return std::vector<Rational>(static_cast<std::size_t>(order_) + 1);
}

int TnDecomposition::min_index() const {
  return rows_.empty() ? 0 : rows_.begin()->first;
}

int TnDecomposition::max_index() const {
  return rows_.empty() ? 0 : rows_.rbegin()->first;
}

std::vector<Rational> tn_eigenvalues(const DiffOp& t, int n, int order) {
  if (order < 0) throw std::invalid_argument("negative eigenvalue order");
  std::vector<Rational> b(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    Rational acc;
    for (int j = std::max(0, -n); j <= k; ++j)
      acc += Rational(binomial(k, j)) * deriv_at_zero(t, j + n, j);
    b[static_cast<std::size_t>(k)] = acc;
  }
  return b;
}

DiffOp tn_operator_terms(const DiffOp& t, int n) {
  std::map<int, Poly> terms;
  for (const auto& [m, qm] : t.terms()) {
    const int k = m - n;
    if (k < 0) continue;
    const Rational c = qm.coeff(k);  // Q_{k+n}^{(k)}(0) / k!
    if (!c.is_zero()) terms.emplace(k, Poly::monomial(c, k));
  }
  return DiffOp(std::move(terms), t.order() + std::max(0, -n));
}

TnDecomposition decompose(const DiffOp& t) {
  // Row n can be nonzero only for m - deg(Q_m) <= n <= m over stored terms.
  int n_min = 0;
  int n_max = -1;
  for (const auto& [m, qm] : t.terms()) {
    n_min = std::min(n_min, m - qm.degree());
    n_max = std::max(n_max, m);
  }
  const int order = t.order() + std::max(0, -n_min);
  std::map<int, std::vector<Rational>> rows;
  for (int n = n_min; n <= n_max; ++n) {
    std::vector<Rational> row = tn_eigenvalues(t, n, order);
    if (!all_zero(row)) rows.emplace(n, std::move(row));
  }
  return TnDecomposition(std::move(rows), order, t.order());
}

DiffOp reconstruct(const TnDecomposition& d) {
  // The inverse binomial transform of row n recovers {Q_{j+n}^{(j)}(0)}_j,
  // i.e. the degree-j coefficient of Q_{j+n} scaled by j!.
  std::map<int, std::vector<Rational>> coeffs;  // k -> ascending coeffs of Q_k
  for (const auto& [n, row] : d.rows()) {
    const std::vector<Rational> derivs = inverse_binomial_transform(row);
    Rational fact(1);
    for (std::size_t j = 0; j < derivs.size(); ++j) {
      if (j > 0) fact *= Rational(static_cast<long>(j));
      if (derivs[j].is_zero()) continue;
      const int k = n + static_cast<int>(j);
      if (k < 0)
        throw std::invalid_argument(
            "row implies a term with a negative derivative index");
      auto& c = coeffs[k];
      if (c.size() <= j) c.resize(j + 1);
      c[j] += derivs[j] / fact;
    }
  }
  std::map<int, Poly> terms;
  for (auto& [k, c] : coeffs) {
    Poly p{std::move(c)};
    if (!p.is_zero()) terms.emplace(k, std::move(p));
  }
  return DiffOp(std::move(terms), d.op_order());
}

}  // namespace hypercore
