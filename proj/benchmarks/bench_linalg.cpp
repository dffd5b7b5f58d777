#include <benchmark/benchmark.h>

#include <random>

#include "coxlab/analysis.hpp"
#include "coxlab/generators.hpp"
#include "coxlab/linalg.hpp"

namespace {

using namespace coxlab;

Matrix random_coxeter(std::size_t n, std::uint64_t seed) {
  return coxeter_matrix(random_poset(n, seed));
}

void BM_Permanent(benchmark::State& state) {
  Matrix c = random_coxeter(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(permanent(c, 24));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Permanent)->DenseRange(8, 16, 2)->Complexity();

void BM_Bruhat(benchmark::State& state) {
  Matrix c = random_coxeter(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bruhat(c));
  }
}
BENCHMARK(BM_Bruhat)->RangeMultiplier(2)->Range(8, 64);

void BM_Invert(benchmark::State& state) {
  Matrix w = cartan_matrix(random_poset(static_cast<std::size_t>(state.range(0)), 11));
  for (auto _ : state) {
    benchmark::DoNotOptimize(invert(w));
  }
}
BENCHMARK(BM_Invert)->RangeMultiplier(2)->Range(8, 64);

void BM_CoxeterMatrix(benchmark::State& state) {
  Poset p = random_poset(static_cast<std::size_t>(state.range(0)), 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coxeter_matrix(p));
  }
}
BENCHMARK(BM_CoxeterMatrix)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();
