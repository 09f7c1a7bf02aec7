#include <benchmark/benchmark.h>

#include "hypermatch/hypergraph.hpp"
#include "hypermatch/rounding.hpp"
#include "hypermatch/stability.hpp"
#include "hypermatch/verify.hpp"

using namespace hypermatch;

namespace {

Execution exec_arg(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_VerifyUnpruned(benchmark::State& state) {
  VerifyOptions o;
  o.exec = exec_arg(state);
  for (auto _ : state) {
    auto r = verify_extremal(7, 2, 2, Constraint::nu_le_s_and_tau_gt_s, o);
    benchmark::DoNotOptimize(r.max_edges_found);
  }
  label(state);
}
BENCHMARK(BM_VerifyUnpruned)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ClosenessExhaustive(benchmark::State& state) {
  const auto h = random_hypergraph(14, 3, 0.4, 7);
  for (auto _ : state) {
    auto r = closeness_to_clique(h, 1, SearchMode::exhaustive, exec_arg(state));
    benchmark::DoNotOptimize(r.missing_edges);
  }
  label(state);
}
BENCHMARK(BM_ClosenessExhaustive)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MonteCarloSweep(benchmark::State& state) {
  const auto h = complete_hypergraph(18, 3);
  const auto f = mix_and_halve(extract_fpm_family(h, 4));
  NearPerfectOptions match;
  for (auto _ : state) {
    auto s = monte_carlo_sweep(h, f, 32, 1, match, exec_arg(state));
    benchmark::DoNotOptimize(s.mean_violation_rate);
  }
  label(state);
}
BENCHMARK(BM_MonteCarloSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
