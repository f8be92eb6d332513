#include <benchmark/benchmark.h>

#include "strata/orbit_catalog.hpp"
#include "strata/paving.hpp"
#include "strata/polynomial.hpp"
#include "strata/sum_space.hpp"
#include "strata/towers.hpp"

using namespace strata;

namespace {

void BM_EnumerateGrassmannian(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = static_cast<Scalar>(state.range(1));
  SubspaceEnumerator e(n, n / 2, PrimeField(p));
  for (auto _ : state) {
    std::size_t dims = 0;
    e.for_each([&](const Subspace& h) { dims += h.dim(); });
    benchmark::DoNotOptimize(dims);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * e.count()));
}
BENCHMARK(BM_EnumerateGrassmannian)->Args({4, 3})->Args({5, 3})->Args({5, 5})->Args({6, 3});

void BM_StratumCensus(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  BilinearSpace v = standard_space(FormType::symmetric, n, PrimeField(5));
  for (auto _ : state) benchmark::DoNotOptimize(stratum_census(v, n / 2, {}, 1));
}
BENCHMARK(BM_StratumCensus)->Arg(3)->Arg(4)->Arg(5);

void BM_OrbitCensusSum(benchmark::State& state) {
  SumSpace s = standard_sum({{FormType::symmetric, 2}, {FormType::symmetric, 3}}, PrimeField(5));
  for (auto _ : state) benchmark::DoNotOptimize(orbit_census(s, 2, {}, 1));
}
BENCHMARK(BM_OrbitCensusSum);

void BM_TransportIsometry(benchmark::State& state) {
  PrimeField f(7);
  BilinearSpace v = standard_space(FormType::symmetric, 5, f);
  SubspaceEnumerator e(5, 2, f);
  std::vector<std::pair<Subspace, Subspace>> pairs;
  for (std::uint64_t i = 0; i < e.count() && pairs.size() < 64; i += 37) {
    Subspace h = e.at(i);
    for (std::uint64_t j = i + 1; j < e.count(); j += 53) {
      Subspace h2 = e.at(j);
      if (r_invariant(v, h) == r_invariant(v, h2) && discriminant_class(v, h) == discriminant_class(v, h2)) {
        pairs.emplace_back(h, h2);
        break;
      }
    }
  }
  for (auto _ : state) {
    for (const auto& [a, b] : pairs) benchmark::DoNotOptimize(transport_isometry(v, a, b));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * pairs.size()));
}
BENCHMARK(BM_TransportIsometry);

void BM_PavingClassify(benchmark::State& state) {
  BilinearSpace v = standard_space(FormType::skew, 6, PrimeField(3));
  auto pts = isotropic_subspaces(v, 3);
  for (auto _ : state) {
    Paving pav = build_paving(v, 3);
    std::size_t acc = 0;
    for (const auto& h : pts) acc += pav.classify(h);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * pts.size()));
}
BENCHMARK(BM_PavingClassify);

void BM_XPoints(benchmark::State& state) {
  SumSpace s = standard_sum({{FormType::symmetric, 2}, {FormType::symmetric, 3}}, PrimeField(3));
  auto omega = enumerate_omega(s, 2);
  for (auto _ : state) {
    std::uint64_t c = 0;
    for (const auto& l : omega) for_each_x_point(s, l, [&](const FlagDatum&) { ++c; });
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_XPoints);

void BM_MuFiber(benchmark::State& state) {
  SumSpace s = standard_sum({{FormType::symmetric, 4}}, PrimeField(5));
  MultiLabel tower{{SingleLabel{FormType::symmetric, 4, 2, RankSymbol::integer(2)}}};
  MultiLabel over{{SingleLabel{FormType::symmetric, 4, 2, RankSymbol::prime0()}}};
  Subspace m = *orbit_representative(s, over);
  for (auto _ : state) benchmark::DoNotOptimize(mu_fiber(s, tower, m));
}
BENCHMARK(BM_MuFiber);

void BM_Interpolate(benchmark::State& state) {
  std::vector<CountSample> samples;
  IntPolynomial poly = gaussian_binomial(8, 4);
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61})
    samples.push_back({p, poly.evaluate(p)});
  for (auto _ : state) benchmark::DoNotOptimize(interpolate_counts(samples, 16));
}
BENCHMARK(BM_Interpolate);

}  // namespace

BENCHMARK_MAIN();
