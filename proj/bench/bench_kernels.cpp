// Serial reference loops vs OpenMP kernels on the exhaustive enumerations.
#include <benchmark/benchmark.h>

#include "braidcode/codec.hpp"
#include "braidcode/efficiency.hpp"
#include "braidcode/metric.hpp"
#include "braidcode/word_problem.hpp"

using namespace braidcode;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(0) ? Execution::Parallel : Execution::Serial;
}

void BM_Injectivity(benchmark::State& state) {
  const CodeScheme scheme(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(injectivity_check(scheme, 5, exec_of(state)).collisions.size());
  }
}
BENCHMARK(BM_Injectivity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Axioms(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_axioms(3, 4, exec_of(state)).violations());
  }
}
BENCHMARK(BM_Axioms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_OracleSweep(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_sweep(3, 6, exec_of(state)).disagreements.size());
  }
}
BENCHMARK(BM_OracleSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Argmin(benchmark::State& state) {
  const CostModel model(1.0 / 3.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(argmin_integer(model, 1'000'000, exec_of(state)));
  }
}
BENCHMARK(BM_Argmin)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_HandleReduceLongCodeWord(benchmark::State& state) {
  const CodeScheme scheme(8);
  std::vector<int> symbols;
  for (int k = 0; k < state.range(0); ++k) symbols.push_back((k * 5 + 3) % 8);
  const SymbolString s(8, symbols);
  std::vector<int> shifted(symbols.begin() + 1, symbols.end());
  shifted.push_back(symbols.front());
  const BraidWord quotient = concat(encode(scheme, s), inverse_string(scheme, SymbolString(8, shifted)));
  for (auto _ : state) benchmark::DoNotOptimize(is_trivial(quotient));
}
BENCHMARK(BM_HandleReduceLongCodeWord)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
