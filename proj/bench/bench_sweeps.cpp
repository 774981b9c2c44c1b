// Serial reference against the OpenMP sweeps on the same inputs.

#include <benchmark/benchmark.h>

#include "prettygood/primes.hpp"

namespace {

using namespace prettygood;

const char* const sweep_inputs[] = {"SC(A3)", "SC(B3)", "SC(G2)", "GL(4)"};

Execution mode(const benchmark::State& state) {
    return state.range(1) ? Execution::parallel : Execution::serial;
}

void label(benchmark::State& state) {
    state.SetLabel(std::string(sweep_inputs[state.range(0)]) +
                   (state.range(1) ? " parallel" : " serial"));
}

void BM_ClosureClasses(benchmark::State& state) {
    const RootDatum r = preset(sweep_inputs[state.range(0)]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(closure_classes(r, mode(state)));
    }
    label(state);
}

void BM_PrettyGoodBruteforce(benchmark::State& state) {
    const RootDatum r = preset(sweep_inputs[state.range(0)]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pretty_good_bruteforce(r, 2, 18, mode(state)));
    }
    label(state);
}

void BM_AllSubsets(benchmark::State& state) {
    const RootDatum r = preset(sweep_inputs[state.range(0)]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(good_all_subsets(r, 3, 18, mode(state)));
    }
    label(state);
}

void BM_PrimeReports(benchmark::State& state) {
    const RootDatum r = preset("SC(E8)");
    const auto primes = primes_up_to(200);
    for (auto _ : state) {
        benchmark::DoNotOptimize(prime_reports(r, primes, state.range(0) ? Execution::parallel
                                                                        : Execution::serial));
    }
    state.SetLabel(state.range(0) ? "parallel" : "serial");
}

void sweep_args(benchmark::internal::Benchmark* b) {
    for (long i = 0; i < 4; ++i) {
        b->Args({i, 0})->Args({i, 1});
    }
}

}  // namespace

BENCHMARK(BM_ClosureClasses)->Apply(sweep_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrettyGoodBruteforce)->Apply(sweep_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AllSubsets)->Args({0, 0})->Args({0, 1})->Args({2, 0})->Args({2, 1})->Args({3, 0})->Args({3, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrimeReports)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
