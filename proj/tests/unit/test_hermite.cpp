#include <doctest.h>

#include <stdexcept>

#include "hypercore/classify.hpp"
#include "hypercore/decompose.hpp"
#include "hypercore/hermite.hpp"
#include "hypercore/jensen.hpp"
#include "hypercore/numeric.hpp"
#include "hypercore/sturm.hpp"
#include "test_util.hpp"

using hypercore::Basis;
using hypercore::BasisKind;
using hypercore::DiffOp;
using hypercore::peetre_expand;
using hypercore::Poly;
using hypercore::Rational;
using hypercore::SeqSpec;
using hypercore::TruncSeries;

namespace {
Poly P(std::initializer_list<Rational> c) { return Poly(std::vector(c)); }
const Basis kHermite{BasisKind::kHermite};
}  // namespace

TEST_CASE("hermite combination form on the paper sequences") {
  const auto idseq = SeqSpec::parse("poly:n");
  CHECK(hypercore::hermite::qk_hermite_combination(kHermite, idseq, 1) ==
        Poly::x());
  CHECK(hypercore::hermite::qk_hermite_combination(kHermite, idseq, 2) ==
        P({Rational(-1, 2)}));

  const auto ones = SeqSpec::parse("poly:1");
  CHECK(hypercore::hermite::qk_hermite_combination(kHermite, ones, 0) ==
        P({Rational(1)}));
  for (int k = 1; k <= 6; ++k)
    CHECK(hypercore::hermite::qk_hermite_combination(kHermite, ones, k)
              .is_zero());

  const auto alt = SeqSpec::parse("altpoly:n");
  CHECK(hypercore::hermite::qk_hermite_combination(kHermite, alt, 3) ==
        P({Rational(0), Rational(1), Rational(0), Rational(-2)}));
}

TEST_CASE("four-way formula agreement") {
  const char* seqs[] = {"poly:n", "poly:n^2+n+1", "altpoly:n", "geom:1/2"};
  for (const char* text : seqs) {
    const auto s = SeqSpec::parse(text);
    const DiffOp rec = peetre_expand(kHermite, s, 12);
    for (int k = 0; k <= 12; ++k) {
      const Poly q = rec.q(k);
      CHECK(hypercore::hermite::qk_hermite_combination(kHermite, s, k) == q);
      CHECK(hypercore::hermite::qk_monomial_sum(kHermite, s, k) == q);
      CHECK(hypercore::hermite::qk_imaginary_pairing(kHermite, s, k) == q);
    }
  }
}

TEST_CASE("closed forms reject shifted bases") {
  const Basis shifted(BasisKind::kHermite, Rational(1), Rational(3));
  const auto s = SeqSpec::parse("poly:n");
  CHECK_THROWS_AS(hypercore::hermite::qk_monomial_sum(shifted, s, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(hypercore::hermite::qk_hermite_combination(shifted, s, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(hypercore::hermite::qk_imaginary_pairing(shifted, s, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      hypercore::hermite::qk_monomial_sum(Basis(BasisKind::kLaguerre), s, 2),
      std::invalid_argument);
}

TEST_CASE("derivative-at-zero structure of the Q's") {
  // Q_{k+2n+1}^{(k)}(0) = 0 and Q_{k+2n}^{(k)}(0) matches the displayed
  // double sum, for k + 2n <= 12.
  const char* seqs[] = {"poly:n", "poly:n^2+n+1", "geom:1/2"};
  for (const char* text : seqs) {
    const auto s = SeqSpec::parse(text);
    const DiffOp rec = peetre_expand(kHermite, s, 12);
    const auto g = hypercore::gstar_values(s, 24);
    for (int k = 0; k <= 12; ++k) {
      for (int n = 0; k + 2 * n <= 12; ++n) {
        if (k + 2 * n + 1 <= 12) {
          CHECK(rec.q(k + 2 * n + 1).derivative(k)(Rational(0)) ==
                Rational(0));
        }
        Rational inner;
        for (int j = 0; j <= n; ++j)
          inner += Rational(hypercore::binomial(n, j),
                            hypercore::int_pow(mpz_class(2), j)) *
                   g[static_cast<std::size_t>(k + n + j)];
        const Rational expect =
            Rational(hypercore::neg_one_pow(n),
                     hypercore::factorial(n) *
                         hypercore::int_pow(mpz_class(2), n)) *
            inner;
        CHECK(rec.q(k + 2 * n).derivative(k)(Rational(0)) == expect);
      }
    }
  }
}

TEST_CASE("decomposition rows via the closed form") {
  const auto idseq = SeqSpec::parse("poly:n");
  for (int m = 0; m <= 8; ++m)
    CHECK(hypercore::hermite::bnk(idseq, 1, m) == Rational(-1, 2));

  // Rows agree with the eigenvalues extracted from the expansion.
  const char* seqs[] = {"poly:n", "poly:n^2+n+1", "altpoly:n", "geom:1/2"};
  for (const char* text : seqs) {
    const auto s = SeqSpec::parse(text);
    const DiffOp rec = peetre_expand(kHermite, s, 16);
    for (int n = 0; n <= 3; ++n) {
      const auto row = hypercore::tn_eigenvalues(rec, 2 * n, 6);
      for (int m = 0; m <= 6; ++m)
        CHECK(hypercore::hermite::bnk(s, n, m) ==
              row[static_cast<std::size_t>(m)]);
    }
  }
}

TEST_CASE("geometric row series collapse to scaled exponentials") {
  // gamma = (1/2)^n: sum_k b_{2n,k} x^k / k! = (3/16)^n / n! e^{x/2}.
  const auto s = SeqSpec::parse("geom:1/2");
  for (int n = 0; n <= 4; ++n) {
    const Rational scale = Rational::pow(Rational(3, 16), n) /
                           Rational(hypercore::factorial(n));
    for (int k = 0; k <= 10; ++k) {
      CHECK(hypercore::hermite::bnk(s, n, k) ==
            scale * Rational::pow(Rational(1, 2), k));
    }
  }
}

TEST_CASE("rodrigues series for the alternating non-preserver") {
  // gamma = (-1)^{n+1}(n-1): h_0 = (x+1)e^{-2x}, h_1 = (1/2)e^{-2x},
  // h_n = 0 for n >= 2.
  const auto s = SeqSpec::parse("altpoly:1-n");
  const TruncSeries h0 = hypercore::hermite::hn(s, 0, 24);
  const TruncSeries h1 = hypercore::hermite::hn(s, 1, 24);
  const TruncSeries h2 = hypercore::hermite::hn(s, 2, 24);
  const TruncSeries e2 = TruncSeries::exp(Rational(-2), 24);
  CHECK(h0 == TruncSeries::from_poly(P({Rational(1), Rational(1)}), 24) * e2);
  CHECK(h1 == (e2 * Rational(1, 2)).truncated(22));
  CHECK(h2.is_zero());
  for (int n = 2; n <= 6; ++n)
    CHECK(hypercore::hermite::hn(s, n, 24).is_zero());
}

TEST_CASE("rodrigues series of the constant sequence") {
  const auto ones = SeqSpec::parse("poly:1");
  const TruncSeries h0 = hypercore::hermite::hn(ones, 0, 12);
  CHECK(h0.coeff(0) == Rational(1));
  for (int k = 1; k <= 12; ++k) CHECK(h0.coeff(k) == Rational(0));
  CHECK(hypercore::hermite::hn(ones, 1, 12).is_zero());
  CHECK_THROWS_AS(hypercore::hermite::hn(ones, 4, 6), std::invalid_argument);
}

TEST_CASE("rodrigues series match the decomposition rows") {
  // binomial transform of k! [x^k] h_n = b_{2n,k}.
  const char* seqs[] = {"poly:n", "altpoly:1-n", "geom:1/2", "poly:n^2+n+1"};
  for (const char* text : seqs) {
    const auto s = SeqSpec::parse(text);
    for (int n = 0; n <= 3; ++n) {
      const TruncSeries h = hypercore::hermite::hn(s, n, 24);
      std::vector<Rational> alpha;
      Rational kfact(1);
      for (int k = 0; k <= 10; ++k) {
        if (k > 0) kfact *= Rational(k);
        alpha.push_back(h.coeff(k) * kfact);
      }
      const auto beta = hypercore::binomial_transform(alpha);
      for (int k = 0; k <= 10; ++k)
        CHECK(beta[static_cast<std::size_t>(k)] ==
              hypercore::hermite::bnk(s, n, k));
    }
  }
}

TEST_CASE("alternating relation between expansions") {
  const DiffOp t = peetre_expand(kHermite, SeqSpec::parse("poly:n"), 8);
  const DiffOp w = peetre_expand(kHermite, SeqSpec::parse("altpoly:n"), 8);
  CHECK(hypercore::hermite::alternate(t) == w);
  CHECK(hypercore::hermite::alternate(w) == t);
  CHECK(hypercore::hermite::alternate(hypercore::hermite::alternate(t)) == t);

  const DiffOp q = peetre_expand(kHermite, SeqSpec::parse("poly:n^2+n+1"), 9);
  const DiffOp qa =
      peetre_expand(kHermite, SeqSpec::parse("altpoly:n^2+n+1"), 9);
  CHECK(hypercore::hermite::alternate(q) == qa);

  CHECK_THROWS_AS(
      hypercore::hermite::alternate(DiffOp({{0, Poly::x()}}, 2)),
      std::invalid_argument);
}

TEST_CASE("multiplier-sequence expansions have real-rooted coefficients") {
  std::vector<SeqSpec> fixtures;
  fixtures.push_back(SeqSpec::parse("poly:n"));
  fixtures.push_back(SeqSpec::parse("poly:n^2+n+1"));
  // A derived sequence: n -> sum_k C(n,k) gamma_{1+k} for gamma = k^2+k+1.
  fixtures.push_back(SeqSpec::explicit_list(hypercore::mscomb_derive(
      SeqSpec::parse("poly:n^2+n+1"), 1, true, 24)));
  for (const auto& s : fixtures) {
    const DiffOp t = peetre_expand(kHermite, s, 10);
    for (int k = 0; k <= 10; ++k) {
      const Poly& q = t.q(k);
      if (q.degree() >= 1) CHECK(hypercore::is_hyperbolic(q));
    }
  }
}

TEST_CASE("images of monomials under a multiplier sequence are hyperbolic") {
  const DiffOp t = peetre_expand(kHermite, SeqSpec::parse("poly:n^2+n+1"), 10);
  for (int n = 0; n <= 10; ++n) {
    const Poly img = t.apply(Poly::monomial(Rational(1), n));
    if (!img.is_zero()) CHECK(hypercore::is_hyperbolic(img));
  }
}

TEST_CASE("consecutive coefficients interlace") {
  const long combos[] = {-2, -1, 1, 2};
  std::vector<SeqSpec> fixtures;
  fixtures.push_back(SeqSpec::parse("poly:n"));
  fixtures.push_back(SeqSpec::explicit_list(hypercore::mscomb_derive(
      SeqSpec::parse("poly:n^2+n+1"), 1, true, 24)));
  for (const auto& s : fixtures) {
    const DiffOp t = peetre_expand(kHermite, s, 9);
    for (int k = 0; k <= 8; ++k) {
      for (long a : combos) {
        for (long b : combos) {
          const Poly mix = t.q(k) * Rational(a) + t.q(k + 1) * Rational(b);
          if (mix.degree() >= 1) CHECK(hypercore::is_hyperbolic(mix));
        }
      }
    }
  }
}

TEST_CASE("edge series identities") {
  // D h_0 = e^{-x}(f' - f) and the adjusted antiderivative of h_1 gives
  // e^{-x}(f' + f), f being the taylor series of the sequence.
  const char* seqs[] = {"poly:n", "poly:n^2+n+1", "geom:1/2", "altpoly:1-n"};
  for (const char* text : seqs) {
    const auto s = SeqSpec::parse(text);
    const TruncSeries minus = hypercore::hermite::edge_series(s, false, 20);
    const TruncSeries plus = hypercore::hermite::edge_series(s, true, 20);
    const TruncSeries dh0 = hypercore::hermite::hn(s, 0, 22).derivative();
    CHECK(dh0.truncated(20) == minus);
    const Rational c0 = (s.eval(0) + s.eval(1)) * Rational(-1, 4);
    const TruncSeries h1 = hypercore::hermite::hn(s, 1, 24);
    CHECK((h1.integral(c0) * Rational(-4)).truncated(20) == plus);
  }
}
