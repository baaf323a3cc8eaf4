#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hypercore/poly.hpp"
#include "hypercore/rational.hpp"

namespace hypercore {

class SeqSpec;

/// Truncated formal power series over Rational. Coefficients of x^0..x^N
/// are meaningful; the stored vector has length N+1 exactly. Arithmetic
/// between mismatched orders truncates to the smaller order.
class TruncSeries {
 public:
  /// Order = coeffs.size() - 1; coeffs must be nonempty.
  explicit TruncSeries(std::vector<Rational> coeffs);
  static TruncSeries zero(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;

  /// Truncation of e^{a x} to the given order.
  static TruncSeries exp(const Rational& a, int order);
  static TruncSeries from_poly(const Poly& p, int order);
  /// Drops trailing zero coefficients into a polynomial.
  Poly to_poly() const;

  /// Termwise derivative; order drops by one. Requires order >= 1.
  TruncSeries derivative() const;
  /// Termwise antiderivative with the given constant term; order grows by one.
  TruncSeries integral(const Rational& constant_term) const;
  /// Cauchy product with the truncation of e^{a x} at this order.
  TruncSeries exp_mul(const Rational& a) const;

  TruncSeries truncated(int order) const;

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const Rational& s);
  friend TruncSeries operator*(const Rational& s, const TruncSeries& a) {
    return a * s;
  }

  bool operator==(const TruncSeries&) const = default;

  friend std::ostream& operator<<(std::ostream& os, const TruncSeries& s);

 private:
  std::vector<Rational> c_;
};

enum class SeriesWeight {
  kTaylor,  // coefficient k is gamma_k / k!
  kPlain,   // coefficient k is gamma_k
};

/// Series built from a sequence: coefficient k is gamma_k/k! (taylor)
/// or gamma_k (plain), k = 0..order.
TruncSeries series_from_sequence(const SeqSpec& s, SeriesWeight weight,
                                 int order);

TruncSeries series_from_values(const std::vector<Rational>& values,
                               SeriesWeight weight);

}  // namespace hypercore
