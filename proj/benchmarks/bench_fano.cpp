#include "fano/broken_line.hpp"
#include "fano/contfrac.hpp"
#include "fano/polygon.hpp"
#include "fano/sl2_lift.hpp"
#include "fano/theorems.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace fano;

namespace {

FanoPolygon hexagon() { return FanoPolygon::validate({{-1, 2}, {1, 1}, {2, -1}, {1, -2}, {-1, -1}, {-2, 1}}); }

void BM_SingularityContent(benchmark::State& state) {
  auto hex = hexagon();
  for (auto _ : state) benchmark::DoNotOptimize(singularity_content(hex));
}
BENCHMARK(BM_SingularityContent);

void BM_LslsHexagon(benchmark::State& state) {
  auto hex = hexagon();
  for (auto _ : state) benchmark::DoNotOptimize(lsls_polygon(hex));
}
BENCHMARK(BM_LslsHexagon);

void BM_EvalPq(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<BigInt> s;
  for (int i = 0; i < state.range(0); ++i) s.emplace_back(d(rng));
  for (auto _ : state) benchmark::DoNotOptimize(eval_pq(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvalPq)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_ConradDecompose(benchmark::State& state) {
  IntMatrix2 m{1, 0, 0, 1};
  const IntMatrix2 step{2, 1, 1, 1};
  for (int i = 0; i < state.range(0); ++i) m = m * step;
  for (auto _ : state) benchmark::DoNotOptimize(conrad_decompose(m));
}
BENCHMARK(BM_ConradDecompose)->Arg(4)->Arg(16)->Arg(64);

void BM_SearchBasket(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_basket(r, static_cast<std::size_t>(4 * r), 4));
}
BENCHMARK(BM_SearchBasket)->Arg(3)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_VerifyThm19(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_thm19(static_cast<int>(state.range(0)), {200, 0}));
}
BENCHMARK(BM_VerifyThm19)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
