#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hypercore/rational.hpp"

namespace hypercore {

/// Dense univariate polynomial over Rational, coefficients in ascending
/// degree order. The zero polynomial is the empty coefficient sequence;
/// nonzero polynomials carry no trailing zero coefficients.
class Poly {
 public:
  /// Degree sentinel for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(Rational c);
  static Poly monomial(Rational c, int k);
  /// The polynomial x.
  static Poly x();

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Degree, or kZeroDegree for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of x^k; zero outside the stored range.
  const Rational& coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Leading coefficient; requires a nonzero polynomial.
  const Rational& leading() const;

  Poly derivative() const;
  /// k-fold derivative.
  Poly derivative(int k) const;
  Rational operator()(const Rational& at) const;

  /// p(alpha*x + beta) with alpha != 0.
  Poly compose_affine(const Rational& alpha, const Rational& beta) const;

  /// Nonnegative integer power.
  Poly pow(int e) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Rational& s);
  friend Poly operator*(const Rational& s, const Poly& b) { return b * s; }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rational& s) { return *this = *this * s; }

  bool operator==(const Poly&) const = default;

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Monic greatest common divisor; gcd(0, 0) is zero.
  static Poly gcd(const Poly& a, const Poly& b);

  /// Monic square-free factors s_1, s_2, ... with p = c * prod s_i^i.
  /// Factors of degree zero are kept so indices line up with multiplicity.
  std::vector<Poly> squarefree_factors() const;
  /// Monic product of the distinct irreducible factors.
  Poly squarefree_part() const;

  /// Display form, descending powers: "-2x^3 + x".
  std::string str(const std::string& var = "x") const;

  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace hypercore
