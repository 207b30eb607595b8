#include <benchmark/benchmark.h>

#include <random>

#include "polyapprox/diagnostics.hpp"
#include "polyapprox/hb.hpp"
#include "polyapprox/schemes.hpp"
#include "polyapprox/spaces.hpp"

using namespace polyapprox;

namespace {

TaylorPoly random_poly(std::size_t degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<Complex> c(degree + 1);
  for (auto& v : c) v = Complex(g(rng), g(rng));
  return TaylorPoly(std::move(c));
}

void BM_Lebesgue(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(diagnostics::lebesgue_constant(n));
}
BENCHMARK(BM_Lebesgue)->RangeMultiplier(8)->Range(8, 4096);

void BM_SupNorm(benchmark::State& state) {
  const auto f = random_poly(static_cast<std::size_t>(state.range(0)), 1);
  const auto sup = SpaceHandle::sup_circle(16, 4096);
  for (auto _ : state) benchmark::DoNotOptimize(sup.norm(f));
}
BENCHMARK(BM_SupNorm)->RangeMultiplier(4)->Range(16, 1024);

void BM_SupProfileGlidingHump(benchmark::State& state) {
  const auto h = diagnostics::gliding_hump(3, 8, 4096);
  for (auto _ : state) benchmark::DoNotOptimize(diagnostics::sup_profile(h.f, 16));
}
BENCHMARK(BM_SupProfileGlidingHump)->Unit(benchmark::kMillisecond);

void BM_HbGram(benchmark::State& state) {
  const hb::SymbolB b(TaylorPoly{0.5, 0.5});
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hb::hb_gram(b, n));
}
BENCHMARK(BM_HbGram)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMillisecond);

void BM_GramProjection(benchmark::State& state) {
  const auto space = SpaceHandle::hb(hb::hb_gram(hb::SymbolB(TaylorPoly{0.0, 0.5}), 256));
  const auto f = random_poly(256, 2);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gram_projection(space, n, f));
}
BENCHMARK(BM_GramProjection)->RangeMultiplier(4)->Range(4, 256);

}  // namespace

BENCHMARK_MAIN();
