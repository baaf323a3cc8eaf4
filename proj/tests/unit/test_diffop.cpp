#include <doctest.h>

#include <stdexcept>

#include "hypercore/diffop.hpp"
#include "hypercore/numeric.hpp"
#include "test_util.hpp"

using hypercore::Basis;
using hypercore::BasisKind;
using hypercore::compose;
using hypercore::DiffOp;
using hypercore::peetre_expand;
using hypercore::peetre_expand_action;
using hypercore::Poly;
using hypercore::Rational;
using hypercore::SeqSpec;

namespace {
Poly P(std::initializer_list<Rational> c) { return Poly(std::vector(c)); }
const Basis kHermite{BasisKind::kHermite};
}  // namespace

TEST_CASE("expansion of the first-order hermite eigenvalue sequence") {
  const DiffOp t = peetre_expand(kHermite, SeqSpec::parse("poly:n"), 12);
  CHECK(t.terms().size() == 2);
  CHECK(t.q(1) == Poly::x());
  CHECK(t.q(2) == P({Rational(-1, 2)}));
  for (int k = 3; k <= 12; ++k) CHECK(t.q(k).is_zero());
}

TEST_CASE("expansion of the alternating hermite sequence") {
  const DiffOp w = peetre_expand(kHermite, SeqSpec::parse("altpoly:n"), 3);
  CHECK(w.q(0).is_zero());
  CHECK(w.q(1) == P({Rational(0), Rational(-1)}));
  CHECK(w.q(2) == P({Rational(-1, 2), Rational(0), Rational(2)}));
  CHECK(w.q(3) == P({Rational(0), Rational(1), Rational(0), Rational(-2)}));
}

TEST_CASE("identity on any basis") {
  const DiffOp id = peetre_expand(Basis(BasisKind::kMonomial),
                                  SeqSpec::parse("poly:1"), 5);
  CHECK(id == DiffOp::identity(5));
}

TEST_CASE("application") {
  const DiffOp t = peetre_expand(kHermite, SeqSpec::parse("poly:n"), 6);
  CHECK(t.apply(hypercore::hermite_poly(2)) ==
        P({Rational(-4), Rational(0), Rational(8)}));

  // Alternating operator of ex-type gamma = (-1)^{n+1}(n-1) applied to
  // 4x^2 + 2x - 5 = -3H_0 + H_1 + H_2 gives -4x^2 - 1.
  const DiffOp w = peetre_expand(kHermite, SeqSpec::parse("altpoly:1-n"), 4);
  CHECK(w.apply(P({Rational(-5), Rational(2), Rational(4)})) ==
        P({Rational(-1), Rational(0), Rational(-4)}));

  // A constant sees only Q_0.
  const DiffOp c = DiffOp({{0, P({Rational(7)})}, {1, Poly::x()}}, 3);
  CHECK(c.apply(P({Rational(2)})) == P({Rational(14)}));

  CHECK_THROWS_AS(w.apply(Poly::monomial(Rational(1), 9)),
                  std::invalid_argument);
}

TEST_CASE("diagonal expansions reproduce their action exactly") {
  const Basis bases[] = {Basis(BasisKind::kHermite),
                         Basis(BasisKind::kLaguerre),
                         Basis(BasisKind::kLegendre),
                         Basis(BasisKind::kMonomial),
                         Basis(BasisKind::kHermite, Rational(1), Rational(3))};
  const char* seqs[] = {"poly:n", "poly:n^2+n+1", "altpoly:n", "geom:1/2"};
  for (const Basis& b : bases) {
    for (const char* text : seqs) {
      const auto s = SeqSpec::parse(text);
      const DiffOp t = peetre_expand(b, s, 10);
      CHECK(t.diagonal_degree_bound());
      for (int n = 0; n <= 10; ++n)
        CHECK(t.apply(b.poly(n)) == b.poly(n) * s.eval(n));
    }
  }
}

TEST_CASE("degree bound holds at higher truncation orders") {
  const DiffOp t = peetre_expand(kHermite, SeqSpec::parse("geom:1/2"), 14);
  CHECK(t.diagonal_degree_bound());
  for (const auto& [k, q] : t.terms()) CHECK(q.degree() <= k);
}

TEST_CASE("composition") {
  const DiffOp xd = DiffOp({{1, Poly::x()}}, 4);
  const DiffOp sq = compose(xd, xd);
  CHECK(sq.q(2) == Poly::monomial(Rational(1), 2));
  CHECK(sq.q(1) == Poly::x());
  for (int n = 0; n <= 4; ++n) {
    const Poly xn = Poly::monomial(Rational(1), n);
    CHECK(sq.apply(xn) == xn * Rational(1L * n * n));
  }

  const DiffOp t = peetre_expand(kHermite, SeqSpec::parse("poly:n"), 4);
  CHECK(compose(DiffOp::identity(0), t) == t.with_order(4));

  // Nested application agrees with the composed operator.
  hypercore::testing::Rng rng(47);
  const DiffOp a = peetre_expand(kHermite, SeqSpec::parse("poly:n^2+n+1"), 5);
  const DiffOp b = peetre_expand(Basis(BasisKind::kLaguerre),
                                 SeqSpec::parse("poly:n"), 5);
  const DiffOp ab = compose(a, b);
  for (int i = 0; i < 20; ++i) {
    const Poly p = rng.poly(3);
    CHECK(ab.apply(p) == a.apply(b.apply(p)));
  }

  CHECK_THROWS_AS(compose(a, b, 6), std::invalid_argument);
}

TEST_CASE("expansions are unique given the action") {
  // Composing the first-order operator with itself acts as gamma = n^2 on
  // the Hermite basis, so it must coincide with the direct expansion.
  const DiffOp t = peetre_expand(kHermite, SeqSpec::parse("poly:n"), 4);
  const DiffOp direct = peetre_expand(kHermite, SeqSpec::parse("poly:n^2"), 8);
  CHECK(compose(t, t) == direct);
}

TEST_CASE("general actions beyond diagonal ones") {
  // T[B_n] = B_{n} for even n, 0 for odd n, on the monomial basis.
  const Basis mono(BasisKind::kMonomial);
  std::vector<Poly> images;
  for (int n = 0; n <= 6; ++n)
    images.push_back(n % 2 == 0 ? mono.poly(n) : Poly());
  const DiffOp t = peetre_expand_action(mono, images, 6);
  for (int n = 0; n <= 6; ++n)
    CHECK(t.apply(mono.poly(n)) == images[static_cast<std::size_t>(n)]);
}

TEST_CASE("validity bound handling") {
  const DiffOp t = DiffOp({{1, P({Rational(0), Rational(-1)})},
                           {0, P({Rational(15, 2)})}},
                          1);
  CHECK_THROWS_AS(t.apply(Poly::monomial(Rational(1), 8)),
                  std::invalid_argument);
  const DiffOp lifted = t.with_order(8);
  CHECK(lifted.apply(Poly::monomial(Rational(2), 8)).degree() == 8);
  CHECK_THROWS_AS(DiffOp({{3, Poly::x()}}, 2), std::invalid_argument);
}
