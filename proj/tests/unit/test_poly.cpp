#include <doctest.h>

#include <stdexcept>

#include "hypercore/basis.hpp"
#include "hypercore/poly.hpp"
#include "test_util.hpp"

using hypercore::Poly;
using hypercore::Rational;

namespace {
Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}
}  // namespace

TEST_CASE("representation invariants") {
  CHECK(Poly().is_zero());
  CHECK(Poly().degree() == Poly::kZeroDegree);
  CHECK(Poly({Rational(1), Rational(0), Rational(0)}).degree() == 0);
  CHECK(Poly::constant(Rational(0)).is_zero());
  CHECK(P({0, 0, 1}).degree() == 2);
  CHECK(P({5}).degree() == 0);
  CHECK((P({1, 1}) - P({1, 1})).is_zero());
}

TEST_CASE("derivative") {
  CHECK(P({-2, 0, 4}).derivative() == P({0, 8}));  // d/dx (4x^2 - 2) = 8x
  CHECK(P({3}).derivative().is_zero());
  CHECK(Poly().derivative().is_zero());
  CHECK(P({0, 0, 0, 1}).derivative(3) == P({6}));
}

TEST_CASE("evaluation") {
  CHECK(P({2, 1})(Rational(-1)) == Rational(1));
  CHECK(P({-2, 0, 4})(Rational(1, 2)) == Rational(-1));
}

TEST_CASE("affine composition") {
  // H_2(x + 3) = 4(x+3)^2 - 2 = 4x^2 + 24x + 34
  CHECK(hypercore::hermite_poly(2).compose_affine(Rational(1), Rational(3)) ==
        P({34, 24, 4}));
  CHECK_THROWS_AS(P({1, 1}).compose_affine(Rational(0), Rational(1)),
                  std::invalid_argument);

  hypercore::testing::Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const Poly p = rng.poly(6);
    const Rational a = rng.nonzero_rational();
    const Rational b = rng.rational();
    CHECK(p.compose_affine(a, b).compose_affine(Rational(1) / a, -b / a) == p);
  }
}

TEST_CASE("division and gcd") {
  const Poly a = P({-1, 0, 1});  // (x-1)(x+1)
  const Poly b = P({-1, 1});
  const auto [q, r] = Poly::divmod(a, b);
  CHECK(q == P({1, 1}));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(Poly::divmod(a, Poly()), std::invalid_argument);
  CHECK(Poly::gcd(a, b) == b);
  CHECK(Poly::gcd(P({0, 2}), P({0, 0, 3})) == P({0, 1}));  // monic

  hypercore::testing::Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    const Poly u = rng.nonzero_poly(5);
    const Poly v = rng.nonzero_poly(3);
    const auto [qq, rr] = Poly::divmod(u, v);
    CHECK(qq * v + rr == u);
    CHECK(rr.degree() < v.degree());
  }
}

TEST_CASE("square-free structure") {
  // (x-1)^2 (x+2)
  const Poly p = P({-1, 1}) * P({-1, 1}) * P({2, 1});
  const auto factors = p.squarefree_factors();
  REQUIRE(factors.size() == 2);
  CHECK(factors[0] == P({2, 1}));
  CHECK(factors[1] == P({-1, 1}));
  CHECK(p.squarefree_part() == P({-1, 1}) * P({2, 1}));
  CHECK(P({5}).squarefree_part() == P({1}));
  CHECK_THROWS_AS(Poly().squarefree_factors(), std::invalid_argument);
}

TEST_CASE("display") {
  CHECK(P({1, 0, -2}).str() == "-2x^2 + 1");
  CHECK(Poly({Rational(1, 2), Rational(-1)}).str() == "-x + 1/2");
  CHECK(Poly().str() == "0");
  CHECK(P({0, 1}).str() == "x");
}
