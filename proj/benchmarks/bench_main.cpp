#include <benchmark/benchmark.h>

#include <random>

#include "affkl/bernstein.hpp"
#include "affkl/coxeter.hpp"
#include "affkl/kazhdan_lusztig.hpp"
#include "affkl/lemmas.hpp"
#include "affkl/primitive.hpp"

using namespace affkl;

namespace {

void BM_Length(benchmark::State& state) {
  const RootDatum& d = RootDatum::sl(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  std::vector<GroupElement> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(random_element(d, rng, 20));
  std::size_t k = 0;
  for (auto _ : state) {
    const GroupElement g = xs[k % xs.size()] * xs[(k + 1) % xs.size()];
    benchmark::DoNotOptimize(g.length());
    ++k;
  }
}
BENCHMARK(BM_Length)->Arg(3)->Arg(5)->Arg(8);

void BM_TMultiply(benchmark::State& state) {
  const RootDatum& d = RootDatum::sl(3);
  std::mt19937_64 rng(2);
  const int len = static_cast<int>(state.range(0));
  const HeckeElt a = HeckeElt::basis(random_element(d, rng, len));
  const HeckeElt b = HeckeElt::basis(random_element(d, rng, len));
  for (auto _ : state) benchmark::DoNotOptimize(t_multiply(a, b));
}
BENCHMARK(BM_TMultiply)->Arg(4)->Arg(8)->Arg(12);

void BM_KLBasis(benchmark::State& state) {
  const RootDatum& d = RootDatum::sl(3);
  const auto cell = enumerate_lowest_cell(d, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    KLCache cache;
    for (const auto& cf : cell) benchmark::DoNotOptimize(kl_basis(cf.w, cache));
  }
  state.counters["elements"] = static_cast<double>(cell.size());
}
BENCHMARK(BM_KLBasis)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Freudenthal(benchmark::State& state) {
  const RootDatum& d = RootDatum::sl(4);
  const std::int64_t c = state.range(0);
  const Vec lambda{c, c, c};
  for (auto _ : state) benchmark::DoNotOptimize(weight_multiplicities(d, lambda, 1 << 20));
}
BENCHMARK(BM_Freudenthal)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
