#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "hypercore/poly.hpp"
#include "hypercore/rational.hpp"

namespace hypercore {

/// Symbolic eigenvalue-sequence specification. All variants evaluate to
/// exact rationals except ApproxPow, whose values approximate n^q with a
/// stated error bound.
///
/// CLI grammar:  list:2,3,4 | poly:n^2+n+1 | altpoly:n | geom:1/2
///               | pow:5/2@1e12
class SeqSpec {
 public:
  enum class Kind { kExplicitList, kPolyInN, kAltPolyInN, kGeometric, kApproxPow };

  static SeqSpec explicit_list(std::vector<Rational> values,
                               Rational error_bound = Rational(0));
  static SeqSpec poly_in_n(Poly p);
  /// gamma_n = (-1)^n * p(n).
  static SeqSpec alt_poly_in_n(Poly p);
  static SeqSpec geometric(Rational ratio);
  /// gamma_n ~ n^{num/den} with |gamma_n - n^{num/den}| <= 1/precision.
  /// Requires num >= 0, den >= 1.
  static SeqSpec approx_pow(long num, long den, mpz_class precision);

  /// Parses the CLI grammar. Throws std::invalid_argument on malformed text.
  static SeqSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool exact() const { return error_.is_zero(); }
  /// Zero for exact variants; otherwise the per-entry error bound.
  const Rational& error_bound() const { return error_; }

  /// Entry n. Throws std::out_of_range past the end of an explicit list.
  Rational eval(long n) const;
  /// Largest valid index (unbounded variants report LONG_MAX).
  long max_index() const;

  /// All zeros except at most two adjacent entries. Explicit lists are
  /// read with an implicit zero tail for this test.
  bool is_trivial_ms() const;

  const Poly& poly() const;
  const std::vector<Rational>& values() const;
  const Rational& ratio() const;

  std::string str() const;

 private:
  SeqSpec(Kind k) : kind_(k) {}

  Kind kind_;
  std::vector<Rational> values_;   // ExplicitList
  Poly poly_;                      // PolyInN / AltPolyInN
  Rational ratio_;                 // Geometric
  long pow_num_ = 0;               // ApproxPow exponent num/den
  long pow_den_ = 1;
  mpz_class precision_ = 1;        // ApproxPow denominator bound
  Rational error_;                 // 0 when exact
};

/// gamma_n -> (-1)^n gamma_n. Approximate sequences are materialized as an
/// explicit list covering indices 0..order_hint.
SeqSpec sign_flipped(const SeqSpec& s, int order_hint);

/// Parses a polynomial in n, e.g. "n^2+n+1", "1-n", "1/2n^3".
Poly parse_poly_in_n(std::string_view text);

}  // namespace hypercore
