#include "hypercore/classify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hypercore/jensen.hpp"
#include "hypercore/numeric.hpp"
#include "hypercore/sturm.hpp"

namespace hypercore {

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kPassDecided: return "PASS_DECIDED";
    case VerdictStatus::kPassToOrder: return "PASS_TO_ORDER";
    case VerdictStatus::kFail: return "FAIL";
    case VerdictStatus::kTrivial: return "TRIVIAL";
    case VerdictStatus::kNotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

namespace {

Verdict fail(std::string check, std::string detail) {
  Verdict v;
  v.status = VerdictStatus::kFail;
  v.check = std::move(check);
  v.detail = std::move(detail);
  return v;
}

// Sign category of an entry under the error bound: +1 / -1 when provably
// positive / negative, 0 when compatible with zero.
int sign_cat(const Rational& g, const Rational& eps) {
  if (g > eps) return 1;
  if (g < -eps) return -1;
  return 0;
}

struct SignPattern {
  bool one_sign = true;
  bool alternating = true;
  long killer = -1;  // index where the last surviving hypothesis died
};

SignPattern classify_signs(const std::vector<Rational>& gamma,
                           const Rational& eps) {
  // A pattern is admissible for LP^s when all provable signs agree, for
  // LP^a when the signs of (-1)^n gamma_n agree.
  int one_dir = 0, alt_dir = 0;
  SignPattern out;
  for (std::size_t n = 0; n < gamma.size(); ++n) {
    const int c = sign_cat(gamma[n], eps);
    if (c == 0) continue;
    const bool was_alive = out.one_sign || out.alternating;
    if (out.one_sign) {
      if (one_dir == 0) one_dir = c;
      else if (c != one_dir) out.one_sign = false;
    }
    const int ac = (n % 2 == 0) ? c : -c;
    if (out.alternating) {
      if (alt_dir == 0) alt_dir = ac;
      else if (ac != alt_dir) out.alternating = false;
    }
    if (was_alive && !out.one_sign && !out.alternating)
      out.killer = static_cast<long>(n);
  }
  return out;
}

std::string sign_string(const std::vector<Rational>& gamma,
                        const Rational& eps) {
  std::string s;
  for (const Rational& g : gamma) {
    const int c = sign_cat(g, eps);
    s += (c > 0 ? '+' : c < 0 ? '-' : '0');
  }
  return s;
}

int effective_order(const SeqSpec& s, int order) {
  return static_cast<int>(
      std::min<long>(order, s.max_index()));
}

std::vector<Rational> sample(const SeqSpec& s, int upto) {
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(upto) + 1);
  for (int n = 0; n <= upto; ++n) v.push_back(s.eval(n));
  return v;
}

}  // namespace

Verdict classical_ms_check(const SeqSpec& s, int order) {
  if (order < 0) throw std::invalid_argument("negative check order");
  if (s.is_trivial_ms()) {
    Verdict v;
    v.status = VerdictStatus::kTrivial;
    v.detail = "at most two adjacent nonzero entries";
    return v;
  }
  const int n_max = effective_order(s, order);
  const Rational eps = s.error_bound();
  const std::vector<Rational> gamma = sample(s, n_max);
  Verdict out;
  out.status = VerdictStatus::kPassToOrder;
  out.order = n_max;
  if (n_max < order)
    out.detail = "order clamped to the length of the explicit list";

  const SignPattern pat = classify_signs(gamma, eps);
  if (!pat.one_sign && !pat.alternating) {
    Verdict v = fail("sign-pattern",
                     "signs " + sign_string(gamma, eps) +
                         " are neither one-sign nor alternating");
    v.witness_index = pat.killer;
    return v;
  }

  if (s.exact()) {
    for (int n = 0; n <= n_max; ++n) {
      const Poly g = jensen_poly(s, n);
      if (g.degree() <= 0) continue;
      if (!is_hyperbolic(g)) {
        Verdict v = fail("jensen", "Jensen polynomial g_" + std::to_string(n) +
                                       " has non-real zeros");
        v.witness_index = n;
        v.witness_poly = g;
        return v;
      }
    }
  } else {
    // Root reality of a perturbed polynomial cannot be settled from an
    // interval around each coefficient; fold into the pass with a warning.
    out.approximate = true;
  }

  if (pat.one_sign) {
    for (int n = 1; n + 1 <= n_max; ++n) {
      const Rational t = gamma[static_cast<std::size_t>(n)] *
                             gamma[static_cast<std::size_t>(n)] -
                         gamma[static_cast<std::size_t>(n - 1)] *
                             gamma[static_cast<std::size_t>(n + 1)];
      if (eps.is_zero()) {
        if (t.sign() < 0) {
          Verdict v = fail("turan", "gamma_n^2 - gamma_{n-1} gamma_{n+1} = " +
                                        t.str() + " < 0 at n = " +
                                        std::to_string(n));
          v.witness_index = n;
          v.value = t;
          return v;
        }
        continue;
      }
      const Rational bound =
          eps * (Rational(2) * gamma[static_cast<std::size_t>(n)].abs() +
                 gamma[static_cast<std::size_t>(n - 1)].abs() +
                 gamma[static_cast<std::size_t>(n + 1)].abs() +
                 Rational(2) * eps);
      if (t < -bound) {
        Verdict v = fail("turan",
                         "Turán expression " + t.str() +
                             " is negative beyond the error bound " +
                             bound.str() + " at n = " + std::to_string(n));
        v.witness_index = n;
        v.value = t;
        v.approximate = true;
        return v;
      }
      if (t.sign() < 0) out.approximate = true;
    }
  }
  return out;
}

namespace {

// Monotonicity |gamma_k| <= |gamma_{k+1}|, interval-aware.
std::optional<Verdict> check_abs_monotone(const std::vector<Rational>& gamma,
                                          const Rational& eps,
                                          bool* inconclusive) {
  for (std::size_t k = 0; k + 1 < gamma.size(); ++k) {
    const Rational a = gamma[k].abs();
    const Rational b = gamma[k + 1].abs();
    if (a > b + Rational(2) * eps) {
      Verdict v = fail("monotonicity",
                       "|gamma_" + std::to_string(k) + "| = " + a.str() +
                           " exceeds |gamma_" + std::to_string(k + 1) +
                           "| = " + b.str());
      v.witness_index = static_cast<long>(k);
      v.approximate = !eps.is_zero();
      return v;
    }
    if (a > b) *inconclusive = true;
  }
  return std::nullopt;
}

}  // namespace

Verdict hermite_ms_check(const SeqSpec& s, int order) {
  if (order < 0) throw std::invalid_argument("negative check order");
  if (s.is_trivial_ms()) {
    Verdict v;
    v.status = VerdictStatus::kTrivial;
    v.detail = "at most two adjacent nonzero entries";
    return v;
  }
  const int n_max = effective_order(s, order);
  const Rational eps = s.error_bound();
  const std::vector<Rational> gamma = sample(s, n_max);
  const SignPattern pat = classify_signs(gamma, eps);

  Verdict base;
  if (pat.one_sign) {
    base = classical_ms_check(s, order);
  } else if (pat.alternating) {
    // The alternating criterion reduces to the one-sign criterion of the
    // sign-flipped sequence, whose entries have the same absolute values.
    base = classical_ms_check(sign_flipped(s, n_max), order);
  } else {
    return classical_ms_check(s, order);  // sign-pattern failure
  }
  if (base.status != VerdictStatus::kPassToOrder) return base;

  bool inconclusive = false;
  if (auto v = check_abs_monotone(gamma, eps, &inconclusive)) return *v;
  base.approximate = base.approximate || inconclusive;
  base.order = n_max;
  return base;
}

Verdict laguerre_ms_check(const SeqSpec& s) {
  if (s.is_trivial_ms()) {
    Verdict v;
    v.status = VerdictStatus::kTrivial;
    v.detail = "at most two adjacent nonzero entries";
    return v;
  }
  std::optional<Poly> f;
  try {
    f = gstar_polynomial(s);
  } catch (const std::domain_error& e) {
    Verdict v;
    v.status = VerdictStatus::kNotApplicable;
    v.detail = e.what();
    return v;
  }
  if (!f) {
    return fail("polynomial",
                "f = sum g_k*(-1) x^k has infinitely many nonzero "
                "coefficients; only polynomial f can qualify (this also "
                "rules out every nontrivial alternating sequence)");
  }
  if (f->is_zero()) {
    Verdict v;
    v.status = VerdictStatus::kTrivial;
    v.detail = "zero sequence";
    return v;
  }
  int dir = 0;
  for (const Rational& c : f->coeffs()) {
    if (c.is_zero()) continue;
    if (dir == 0) dir = c.sign();
    else if (c.sign() != dir) {
      Verdict v = fail("sign-pattern",
                       "f = " + f->str() + " has coefficients of both signs");
      v.witness_poly = *f;
      return v;
    }
  }
  if (f->degree() >= 1 && !roots_in_closed_interval(*f, Rational(-1), Rational(0))) {
    Verdict v = fail("roots", "f = " + f->str() +
                                  " has a zero outside [-1, 0] (or a "
                                  "non-real zero)");
    v.witness_poly = *f;
    return v;
  }
  Verdict v;
  v.status = VerdictStatus::kPassDecided;
  v.detail = "f = " + f->str() + " lies in the polynomial class with zeros in [-1, 0]";
  v.witness_poly = *f;
  return v;
}

Verdict quad_op_hp_check(const Poly& q2, const Poly& q1, const Poly& q0) {
  if (q2.degree() > 2 || q1.degree() > 1 || q0.degree() != 0)
    throw std::invalid_argument(
        "expected deg Q2 <= 2, deg Q1 <= 1, deg Q0 = 0");
  const Rational a = q2.coeff(2);
  const Rational b = q1.coeff(1);
  const Rational c = q0.coeff(0);
  if (a.is_zero() || b.is_zero()) {
    Verdict v;
    v.status = VerdictStatus::kNotApplicable;
    v.detail = "leading coefficients must not vanish for the quadratic test";
    return v;
  }
  if (!(a.sign() == b.sign() && b.sign() == c.sign())) {
    Verdict v = fail("sign", "leading coefficients a = " + a.str() + ", b = " +
                                 b.str() + ", c = " + c.str() +
                                 " are not of one sign");
    return v;
  }
  const Rational disc = q2.coeff(1) * q2.coeff(1) - Rational(4) * a * q2.coeff(0);
  const Rational r3 = -q1.coeff(0) / b;
  Rational value;
  if (disc.sign() < 0) {
    Verdict v;
    v.status = VerdictStatus::kNotApplicable;
    v.detail = "Q2 has non-real zeros; the criterion presumes real factors";
    return v;
  }
  if (disc.is_zero()) {
    const Rational r1 = -q2.coeff(1) / (Rational(2) * a);
    if (r3 != r1) {
      Verdict v = fail("repeated-root",
                       "Q2 has a double zero the zero of Q1 misses; such "
                       "operators never preserve hyperbolicity");
      v.value = r1;
      return v;
    }
    value = b * b / Rational(4) - a * c;  // collapsed root triple
  } else {
    // b^2 (r1-r3)(r3-r2)/(r1-r2)^2 - a c = -a b^2 Q2(r3)/disc - a c
    value = -a * b * b * q2(r3) / disc - a * c;
  }
  Verdict v;
  v.value = value;
  if (value.sign() >= 0) {
    v.status = VerdictStatus::kPassDecided;
    v.detail = "Turán expression " + value.str() + " >= 0";
  } else {
    v.status = VerdictStatus::kFail;
    v.check = "turan";
    v.detail = "Turán expression " + value.str() + " < 0";
  }
  return v;
}

Verdict hp_falsify(const DiffOp& t, const std::vector<Poly>& corpus) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Poly& p = corpus[i];
    if (p.is_zero() || !is_hyperbolic(p))
      throw std::invalid_argument("corpus entry " + std::to_string(i) +
                                  " is not hyperbolic");
    if (p.degree() > t.order())
      throw std::invalid_argument("corpus entry " + std::to_string(i) +
                                  " exceeds the operator order");
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Poly img = t.apply(corpus[i]);
    if (!img.is_zero() && !is_hyperbolic(img)) {
      Verdict v = fail("image", "T[" + corpus[i].str() + "] = " + img.str() +
                                    " has non-real zeros");
      v.witness_index = static_cast<long>(i);
      v.witness_poly = img;
      return v;
    }
  }
  Verdict v;
  v.status = VerdictStatus::kPassToOrder;
  v.order = static_cast<int>(corpus.size());
  v.detail = "no witness in the corpus; not a proof of preservation";
  return v;
}

std::vector<Poly> standard_corpus() {
  std::vector<Poly> out;
  for (long a = -2; a <= 2; ++a) {
    for (long b = a; b <= 2; ++b) {
      out.push_back(Poly({Rational(-a), Rational(1)}) *
                    Poly({Rational(-b), Rational(1)}));
    }
  }
  for (int n = 0; n <= 8; ++n) out.push_back(hermite_poly(n));
  const Poly x = Poly::x();
  const Poly xm1({Rational(-1), Rational(1)});
  for (int n = 0; n <= 8; ++n) {
    for (int m = 0; n + m <= 8; ++m) {
      if (n + m == 0) continue;
      out.push_back(x.pow(n) * xm1.pow(m));
    }
  }
  // The binomial powers are the complete test family for classical
  // diagonal operators; failures of nearly-preserving operators can
  // first appear well past degree 8 (3x^2 D^2 + 18x D + 29 needs n = 15).
  const Poly xp1({Rational(1), Rational(1)});
  for (int n = 1; n <= 16; ++n) out.push_back(xp1.pow(n));
  return out;
}

std::vector<Rational> mscomb_derive(const SeqSpec& s, int m, bool first,
                                    int order) {
  if (m < 0 || order < 0) throw std::invalid_argument("negative index");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    Rational acc;
    if (first) {
      for (int k = 0; k <= n; ++k)
        acc += Rational(binomial(n, k)) * s.eval(m + k);
    } else {
      for (int k = 0; k <= m; ++k)
        acc += Rational(binomial(m, k)) * s.eval(n + k);
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace hypercore
