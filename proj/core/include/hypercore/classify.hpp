#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypercore/diffop.hpp"
#include "hypercore/poly.hpp"
#include "hypercore/rational.hpp"
#include "hypercore/seqspec.hpp"

namespace hypercore {

enum class VerdictStatus {
  kPassDecided,   // fully decidable criterion, settled
  kPassToOrder,   // necessary conditions hold up to the stated order
  kFail,          // violated, with a reproducible witness
  kTrivial,       // at most two adjacent nonzero entries; excluded by the
                  // characterization theorems but always a multiplier sequence
  kNotApplicable,
};

std::string to_string(VerdictStatus s);

struct Verdict {
  VerdictStatus status = VerdictStatus::kNotApplicable;
  /// Meaning depends on the check: order stamp for kPassToOrder, corpus
  /// size for the falsifier.
  int order = -1;
  /// Which subcheck decided (e.g. "sign-pattern", "jensen", "turan",
  /// "monotonicity", "roots", "repeated-root").
  std::string check;
  std::string detail;
  std::optional<Poly> witness_poly;
  std::optional<long> witness_index;
  std::optional<Rational> value;
  /// Set when approximate entries forced an inconclusive subcheck to be
  /// folded into a pass.
  bool approximate = false;

  bool failed() const { return status == VerdictStatus::kFail; }
};

/// Necessary-condition battery for classical multiplier sequences up to
/// the given order: admissible sign pattern (one sign or alternating),
/// hyperbolic Jensen polynomials, and Turán inequalities in the one-sign
/// case. Approximate sequences run in interval style: a subcheck fails
/// only when it fails by more than the propagated error bound, and an
/// undecidable subcheck is folded into the pass with a warning flag.
Verdict classical_ms_check(const SeqSpec& s, int order);

/// Hermite criterion to the given order: the classical battery plus
/// |gamma_k| <= |gamma_{k+1}|; alternating sequences are routed through
/// the sign-flipped sequence, which carries the same absolute values.
Verdict hermite_ms_check(const SeqSpec& s, int order);

/// Decided verdict: f = sum g_k*(-1) x^k must be a polynomial with
/// same-sign coefficients and all roots in [-1, 0]. Non-polynomial f is a
/// failure, not an error. Nontrivial alternating sequences always fail.
Verdict laguerre_ms_check(const SeqSpec& s);

/// Decided hyperbolicity-preservation test for
/// Q2 D^2 + Q1 D + Q0 with deg Q2 <= 2, deg Q1 <= 1, deg Q0 = 0.
/// Same-sign leading coefficients first, then the Turán-type expression
///   b^2 (r1-r3)(r3-r2)/(r1-r2)^2 - a c
/// evaluated exactly in coefficient form as -a b^2 Q2(r3)/disc(Q2) - a c.
/// Equal roots r1 = r2 = r3 use the factor 1/4; r1 = r2 != r3 fails
/// outright; complex-rooted Q2 is out of the criterion's scope.
Verdict quad_op_hp_check(const Poly& q2, const Poly& q1, const Poly& q0);

/// Applies t to each corpus polynomial (all must be hyperbolic and of
/// degree within t's order) and reports the first nonzero non-hyperbolic
/// image. A pass is stamped with the corpus size and proves nothing.
Verdict hp_falsify(const DiffOp& t, const std::vector<Poly>& corpus);

/// Hyperbolic probe corpus: rational-root quadratics (x-a)(x-b) for
/// a, b in {-2..2}, Hermite polynomials through degree 8, the
/// monomial-edge family x^n (x-1)^m with n+m <= 8, and the binomial
/// powers (1+x)^n through n = 16 (the Pólya-Schur test family; this is
/// where classically-diagonal non-preservers first show witnesses).
/// Operators must declare order >= 16 to run against it.
std::vector<Poly> standard_corpus();

/// Derived sequences of a one-sign classical multiplier sequence:
///   first:  n -> sum_{k<=n} C(n,k) gamma_{m+k}
///   second: n -> sum_{k<=m} C(m,k) gamma_{n+k}
/// evaluated to index `order` by direct summation.
std::vector<Rational> mscomb_derive(const SeqSpec& s, int m, bool first,
                                    int order);

}  // namespace hypercore
