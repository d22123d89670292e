#include <benchmark/benchmark.h>

#include <random>

#include "ncrat/cyclic.hpp"
#include "ncrat/machine.hpp"
#include "ncrat/parse.hpp"
#include "ncrat/whitehead.hpp"

using namespace ncrat;

namespace {

void BM_ForbiddenScan(benchmark::State& state) {
  const auto spec = RingSpec::stage(std::nullopt);
  std::mt19937 rng(7);
  // Letters f and s only: no factor matches, so the scan reads the whole word.
  const Symbol letters[] = {spec->symbol("f"), spec->symbol("s")};
  std::bernoulli_distribution coin;
  Word w(static_cast<std::size_t>(state.range(0)));
  for (auto& s : w)
    s = letters[coin(rng)];
  for (auto _ : state)
    benchmark::DoNotOptimize(spec->contains_forbidden(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ForbiddenScan)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

void BM_MachineExpand(benchmark::State& state) {
  const auto spec = RingSpec::stage(2u);
  const auto machine = linearize(parse_expr("f*(1-s*x1)^-1*g + (1 - x1*x2)^-1", spec, 2), spec, 2);
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(machine_expand(machine, order));
}
BENCHMARK(BM_MachineExpand)->DenseRange(2, 8, 2);

void BM_Chi(benchmark::State& state) {
  const auto spec = RingSpec::stage(2u);
  const auto alpha = RingMatrix::from_rows(spec, {{parse_element("s - g f s", spec), parse_element("f", spec)},
                                                  {parse_element("g", spec), parse_element("s s", spec)}});
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(chi(alpha, order));
}
BENCHMARK(BM_Chi)->DenseRange(2, 8, 2);

void BM_CounterexampleChain(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_counterexample_chain(m, m + 2));
}
BENCHMARK(BM_CounterexampleChain)->DenseRange(0, 4);

} // namespace
BENCHMARK_MAIN();
