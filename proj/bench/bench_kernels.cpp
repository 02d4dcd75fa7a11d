// Serial vs OpenMP kernels. Run with OMP_NUM_THREADS set to compare scaling.

#include <benchmark/benchmark.h>

#include "netmaint/generators.hpp"
#include "netmaint/nonpreemptive_approx.hpp"
#include "netmaint/oracles.hpp"

using namespace netmaint;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) ? Execution::Parallel : Execution::Serial;
}

Instance dense_random(int nodes, long long horizon, double mix) {
  RandomSpec spec;
  spec.seed = 7;
  spec.nodes = nodes;
  spec.edge_density = 0.6;
  spec.horizon = horizon;
  spec.max_processing = 3;
  spec.preemption_mix = mix;
  return gen_random(spec);
}

void candidate_family(benchmark::State& state) {
  const Instance inst = dense_random(40, 60, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(build_family(inst, mode(state)));
}

void nonpreemptive_search(benchmark::State& state) {
  const Instance inst = gen_3sat_gadget(CnfFormula{3, {{1, 2, 3}, {-1, -2, -3}, {1, -2, 3}}});
  OracleOptions options;
  options.execution = mode(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_nonpreemptive(inst, Objective::MaxConnectivity, options));
  }
}

void integral_search(benchmark::State& state) {
  const Instance inst = with_preemption(dense_random(4, 7, 1.0), Preemption::IntegralOnly);
  OracleOptions options;
  options.execution = mode(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_integral_preemptive(inst, Objective::MaxConnectivity, options));
  }
}

}  // namespace

BENCHMARK(candidate_family)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(nonpreemptive_search)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(integral_search)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
