#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypercore/poly.hpp"
#include "hypercore/rational.hpp"

namespace hypercore {

enum class BasisKind { kMonomial, kHermite, kLaguerre, kLegendre };

Poly hermite_poly(int n);
Poly laguerre_poly(int n);
Poly legendre_poly(int n);

/// The real polynomial i^m H_m(i x); degrees m, m-2, ... with all
/// coefficients of sign (-1)^m.
Poly hermite_imag(int m);

/// A polynomial basis B_0, B_1, ... with deg B_n = n, optionally composed
/// with an affine substitution: B_n(scale * x + shift), scale != 0.
class Basis {
 public:
  explicit Basis(BasisKind kind) : kind_(kind) {}
  Basis(BasisKind kind, Rational scale, Rational shift);

  /// Accepts hermite | laguerre | legendre | monomial.
  static Basis parse(std::string_view name);

  BasisKind kind() const { return kind_; }
  bool has_affine() const { return affine_.has_value(); }
  const Rational& scale() const;
  const Rational& shift() const;

  /// Exact B_n; degree exactly n, B_0 a nonzero constant.
  Poly poly(int n) const;

  /// d^k/dx^k B_n at 0. Closed forms for plain Hermite and Laguerre;
  /// monomial and Legendre differentiate and evaluate. Affine bases are
  /// rejected.
  Rational deriv_at_zero(int n, int k) const;

  /// Coefficients c_0..c_deg(p) with p = sum c_k B_k, by back-substitution
  /// on the triangular change-of-basis system. Empty for the zero
  /// polynomial.
  std::vector<Rational> expand(const Poly& p) const;

  std::string str() const;

 private:
  BasisKind kind_;
  std::optional<std::pair<Rational, Rational>> affine_;  // scale, shift
};

}  // namespace hypercore
