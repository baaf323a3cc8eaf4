#include <doctest.h>

#include <stdexcept>

#include "hypercore/jensen.hpp"
#include "hypercore/numeric.hpp"
#include "hypercore/seqspec.hpp"
#include "hypercore/series.hpp"
#include "test_util.hpp"

using hypercore::Poly;
using hypercore::Rational;
using hypercore::SeqSpec;
using hypercore::series_from_sequence;
using hypercore::series_from_values;
using hypercore::SeriesWeight;
using hypercore::TruncSeries;

TEST_CASE("series from sequences") {
  const auto ones = SeqSpec::parse("poly:1");
  const TruncSeries ex = series_from_sequence(ones, SeriesWeight::kTaylor, 3);
  CHECK(ex.coeffs() == std::vector<Rational>{Rational(1), Rational(1),
                                             Rational(1, 2), Rational(1, 6)});

  const auto quad = SeqSpec::parse("poly:n^2+n+1");
  const TruncSeries q = series_from_sequence(quad, SeriesWeight::kTaylor, 2);
  CHECK(q.coeffs() ==
        std::vector<Rational>{Rational(1), Rational(3), Rational(7, 2)});

  // Plain weights over the reversed-Jensen values of {2,3,4,...} give x+2.
  const auto shifted = SeqSpec::parse("poly:n+2");
  const auto gs = hypercore::gstar_values(shifted, 6);
  CHECK(series_from_values(gs, SeriesWeight::kPlain).to_poly() ==
        Poly({Rational(2), Rational(1)}));
}

TEST_CASE("exponential kernels invert") {
  hypercore::testing::Rng rng(29);
  const Rational factors[] = {Rational(1), Rational(-1), Rational(2),
                              Rational(-2), Rational(1, 2)};
  for (int i = 0; i < 30; ++i) {
    std::vector<Rational> c(12);
    for (auto& x : c) x = rng.rational();
    const TruncSeries s{c};
    for (const Rational& a : factors) {
      CHECK(s.exp_mul(a).exp_mul(-a) == s);
    }
  }
}

TEST_CASE("exp_mul on the unit series is the exponential") {
  std::vector<Rational> unit(8);
  unit[0] = Rational(1);
  CHECK(TruncSeries(unit).exp_mul(Rational(2)) ==
        TruncSeries::exp(Rational(2), 7));
}

TEST_CASE("exp_mul realizes the binomial transform") {
  hypercore::testing::Rng rng(31);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<Rational> alpha(17);
    for (auto& x : alpha) x = Rational(rng.integer(-9, 9));
    const TruncSeries t =
        series_from_values(alpha, SeriesWeight::kTaylor).exp_mul(Rational(1));
    const auto beta = hypercore::binomial_transform(alpha);
    for (int n = 0; n <= 16; ++n) {
      CHECK(t.coeff(n) * Rational(hypercore::factorial(n)) ==
            beta[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("derivative and integral") {
  const TruncSeries e = TruncSeries::exp(Rational(1), 6);
  CHECK(e.derivative() == TruncSeries::exp(Rational(1), 5));
  CHECK(TruncSeries({Rational(2), Rational(1)}).derivative() ==
        TruncSeries({Rational(1)}));
  CHECK_THROWS_AS(TruncSeries({Rational(2)}).derivative(),
                  std::invalid_argument);
  const TruncSeries s({Rational(1), Rational(2), Rational(3)});
  CHECK(s.integral(Rational(5)).derivative() == s);
  CHECK(s.integral(Rational(5)).coeff(0) == Rational(5));
}

TEST_CASE("mixed orders truncate to the smaller") {
  const TruncSeries a({Rational(1), Rational(2), Rational(3), Rational(4)});
  const TruncSeries b({Rational(1), Rational(1)});
  CHECK((a + b).order() == 1);
  CHECK((a * b).order() == 1);
  CHECK((a * b).coeff(1) == Rational(3));
}

TEST_CASE("taylor series of an alternating sequence against a closed form") {
  // gamma_k = (-1)^{k+1}(k-1); e^{-x} times its taylor series is
  // (x+1)e^{-2x}, whose coefficients are (-2)^k/k! + (-2)^{k-1}/(k-1)!.
  const auto s = SeqSpec::parse("altpoly:1-n");
  const TruncSeries h0 =
      series_from_sequence(s, SeriesWeight::kTaylor, 16).exp_mul(Rational(-1));
  Rational kfact(1);
  for (int k = 0; k <= 16; ++k) {
    if (k > 0) kfact *= Rational(k);
    Rational expect = Rational::pow(Rational(-2), k) / kfact;
    if (k >= 1)
      expect += Rational::pow(Rational(-2), k - 1) * Rational(k) / kfact;
    CHECK(h0.coeff(k) == expect);
  }
}
