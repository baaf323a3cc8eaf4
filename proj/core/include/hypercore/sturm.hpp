#pragma once

#include <optional>

#include "hypercore/poly.hpp"
#include "hypercore/rational.hpp"

namespace hypercore {

/// Interval endpoint for Sturm queries: a rational value or an infinity.
class SturmBound {
 public:
  static SturmBound neg_inf() { return SturmBound(-1, {}); }
  static SturmBound pos_inf() { return SturmBound(+1, {}); }
  static SturmBound at(Rational v) { return SturmBound(0, std::move(v)); }
  SturmBound(Rational v) : SturmBound(0, std::move(v)) {}
  SturmBound(long v) : SturmBound(0, Rational(v)) {}

  bool finite() const { return dir_ == 0; }
  bool is_neg_inf() const { return dir_ < 0; }
  bool is_pos_inf() const { return dir_ > 0; }
  const Rational& value() const { return *v_; }

 private:
  SturmBound(int dir, std::optional<Rational> v) : dir_(dir), v_(std::move(v)) {}
  int dir_;
  std::optional<Rational> v_;
};

/// Number of distinct real roots of p in the half-open interval (lo, hi].
/// p must be nonzero. Infinite endpoints are handled through the signs of
/// the leading coefficients of the Sturm chain.
long sturm_count(const Poly& p, const SturmBound& lo, const SturmBound& hi);

/// True iff every complex root of p is real (counted with multiplicity,
/// which reduces to the square-free factors all splitting over R).
/// Nonzero constants are hyperbolic by convention; the zero polynomial is
/// rejected and must be special-cased by the caller.
bool is_hyperbolic(const Poly& p);

/// True iff p is hyperbolic and every root lies in [lo, hi].
bool roots_in_closed_interval(const Poly& p, const Rational& lo,
                              const Rational& hi);

}  // namespace hypercore
