/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#include <benchmark/benchmark.h>

#include <vector>

#include "carlitz/engine.hpp"

using namespace carlitz;

namespace {

// inversion of the Carlitz exponential, the primitive behind every
// series-route value; fresh cache per iteration so memoization cannot hide
// the cost
void BM_ExpInverse(benchmark::State& state) {
  FieldPtr f = FqField::create(3, 1);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CarlitzCache cache(f);
    TruncSeries inv = cache.exp_series(order).shift_down(1).inverse();
    benchmark::DoNotOptimize(inv);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExpInverse)->RangeMultiplier(2)->Range(16, 256)->Complexity();

// one full Stirling triangle, the table every Bernoulli value reads
void BM_StirlingTriangle(benchmark::State& state) {
  FieldPtr f = FqField::create(2, 1);
  const long long n_max = state.range(0);
  for (auto _ : state) {
    CarlitzCache cache(f);
    StirlingTable st(cache);
    RatFunc sink = RatFunc::zero(f.get());
    for (long long n = 0; n <= n_max; ++n)
      for (long long m = 0; m <= n; ++m) sink += st.value(n, m);
    benchmark::DoNotOptimize(sink);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StirlingTriangle)->RangeMultiplier(2)->Range(8, 64)->Complexity();

// the two independent multi-poly routes on the same sweep, for contrast
void run_mpbcn(benchmark::State& state, bool closed) {
  FieldPtr f = FqField::create(3, 1);
  const long long n_max = state.range(0);
  for (auto _ : state) {
    Engine eng(f);
    IndexData d = eng.at().index_data(Index({2, 1}));
    JTuple j(2, 0);
    RatFunc sink = RatFunc::zero(f.get());
    for (long long n = 0; n <= n_max; ++n)
      sink += closed ? eng.bernoulli().mpbcn(d, j, n)
                     : eng.bernoulli().mpbcn_oracle(d, j, n);
    benchmark::DoNotOptimize(sink);
  }
  state.SetComplexityN(state.range(0));
}
void BM_MpbcnClosed(benchmark::State& state) { run_mpbcn(state, true); }
void BM_MpbcnSeries(benchmark::State& state) { run_mpbcn(state, false); }
BENCHMARK(BM_MpbcnClosed)->RangeMultiplier(2)->Range(8, 64)->Complexity();
BENCHMARK(BM_MpbcnSeries)->RangeMultiplier(2)->Range(8, 64)->Complexity();

// finite zeta by prime degree: the direct route sums over all monic
// polynomials below the degree, the polylogarithm route over digit chains
void run_zeta(benchmark::State& state, bool direct) {
  FieldPtr f = FqField::create(2, 1);
  const int deg = static_cast<int>(state.range(0));
  std::vector<Poly> primes = monic_irreducibles(f.get(), deg);
  while (primes.back().degree() < deg) primes.pop_back();
  const Poly prime = primes.back();
  const Index s({2, 1});
  for (auto _ : state) {
    Engine eng(f);
    FiniteZeta z = eng.zeta(PrimeModulus(prime));
    Residue r = direct ? z.zeta_direct(s) : z.zeta_via_cmpl(s);
    benchmark::DoNotOptimize(r);
  }
  state.SetComplexityN(state.range(0));
}
void BM_ZetaDirect(benchmark::State& state) { run_zeta(state, true); }
void BM_ZetaPolylog(benchmark::State& state) { run_zeta(state, false); }
BENCHMARK(BM_ZetaDirect)->DenseRange(2, 7)->Complexity();
BENCHMARK(BM_ZetaPolylog)->DenseRange(2, 7)->Complexity();

// Anderson-Thakur polynomials through x^N, denominator clearing included
void BM_AndersonSeries(benchmark::State& state) {
  FieldPtr f = FqField::create(3, 1);
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CarlitzCache cache(f);
    AndersonThakur at(cache);
    ATSeries s = at.series(n_max);
    benchmark::DoNotOptimize(s);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AndersonSeries)->RangeMultiplier(2)->Range(4, 32)->Complexity();

}  // namespace

BENCHMARK_MAIN();
