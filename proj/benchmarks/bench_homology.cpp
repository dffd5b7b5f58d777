#include <benchmark/benchmark.h>

#include "coxlab/analysis.hpp"
#include "coxlab/generators.hpp"
#include "coxlab/homology.hpp"

namespace {

using namespace coxlab;

void BM_RegularCoresolution(benchmark::State& state) {
  Poset p = birkhoff(random_poset(static_cast<std::size_t>(state.range(0)), 3)).base;
  for (auto _ : state) {
    HomologyEngine engine(std::make_shared<Poset>(p));
    benchmark::DoNotOptimize(engine.regular_coresolution().length());
  }
  state.counters["elements"] = static_cast<double>(p.size());
}
BENCHMARK(BM_RegularCoresolution)->DenseRange(3, 6);

void BM_FullProfile(benchmark::State& state) {
  Poset p = birkhoff(random_poset(static_cast<std::size_t>(state.range(0)), 3)).base;
  for (auto _ : state) {
    HomologyEngine engine(std::make_shared<Poset>(p));
    benchmark::DoNotOptimize(engine.profile());
  }
  state.counters["elements"] = static_cast<double>(p.size());
}
BENCHMARK(BM_FullProfile)->DenseRange(3, 6);

void BM_GradePermutations(benchmark::State& state) {
  Poset p = boolean_lattice(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    HomologyEngine engine(std::make_shared<Poset>(p));
    benchmark::DoNotOptimize(engine.grade_permutation_ar());
    benchmark::DoNotOptimize(engine.grade_permutation_corollary());
  }
}
BENCHMARK(BM_GradePermutations)->DenseRange(1, 4);

void BM_VerifyMainTheorems(benchmark::State& state) {
  Poset p = paper_poset10();
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_main_theorems(p));
  }
}
BENCHMARK(BM_VerifyMainTheorems);

}  // namespace

BENCHMARK_MAIN();
