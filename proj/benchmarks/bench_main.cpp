#include <benchmark/benchmark.h>

#include "hypercore/classify.hpp"
#include "hypercore/decompose.hpp"
#include "hypercore/hermite.hpp"
#include "hypercore/laguerre.hpp"
#include "hypercore/sturm.hpp"

namespace {

using namespace hypercore;

void BM_PeetreExpandHermite(benchmark::State& state) {
  const Basis basis{BasisKind::kHermite};
  const auto s = SeqSpec::parse("poly:n^2+n+1");
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(peetre_expand(basis, s, order));
  }
}
BENCHMARK(BM_PeetreExpandHermite)->Arg(8)->Arg(12)->Arg(16);

void BM_ComposeLegendreCube(benchmark::State& state) {
  const DiffOp base{{{2, Poly({Rational(-1), Rational(0), Rational(1)})},
                     {1, Poly::monomial(Rational(2), 1)},
                     {0, Poly::constant(Rational(1))}},
                    2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(compose(base, base), base));
  }
}
BENCHMARK(BM_ComposeLegendreCube);

void BM_DecomposeRoundTrip(benchmark::State& state) {
  const DiffOp t =
      peetre_expand(Basis{BasisKind::kHermite}, SeqSpec::parse("geom:1/2"),
                    static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct(decompose(t)));
  }
}
BENCHMARK(BM_DecomposeRoundTrip)->Arg(8)->Arg(12);

void BM_IsHyperbolic(benchmark::State& state) {
  // Dense quartic with three real roots and a conjugate pair factored in.
  const Poly p = Poly({Rational(-1), Rational(1)}) *
                 Poly({Rational(2), Rational(1)}) *
                 Poly({Rational(0), Rational(1)}) *
                 Poly({Rational(1), Rational(1), Rational(1)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_hyperbolic(p));
  }
}
BENCHMARK(BM_IsHyperbolic);

void BM_SturmCount(benchmark::State& state) {
  const Poly p = hermite_poly(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sturm_count(p, SturmBound::neg_inf(), SturmBound::pos_inf()));
  }
}
BENCHMARK(BM_SturmCount)->Arg(6)->Arg(10)->Arg(14);

void BM_HermiteHn(benchmark::State& state) {
  const auto s = SeqSpec::parse("altpoly:1-n");
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermite::hn(s, 3, 24));
  }
}
BENCHMARK(BM_HermiteHn);

void BM_HorribleIdentity(benchmark::State& state) {
  const long bound = state.range(0);
  for (auto _ : state) {
    for (long n = 0; n <= bound; ++n)
      for (long m = 0; m <= bound; ++m)
        for (long p = 0; p <= bound; ++p)
          benchmark::DoNotOptimize(laguerre::identity_horrible(n, m, p));
  }
}
BENCHMARK(BM_HorribleIdentity)->Arg(6);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
