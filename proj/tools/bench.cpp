// OpenMP kernels against their serial references. Set OMP_NUM_THREADS to
// vary the thread count.

#include <benchmark/benchmark.h>

#include "circlekit/registry.hpp"
#include "circlekit/ruler.hpp"

using namespace circlekit;

namespace {

const char* const kChecks[] = {"L3.P1", "DF2.T1", "HQ.ALL", "AK.T3"};

void parallel_check(benchmark::State& state) {
    const char* id = kChecks[state.range(0)];
    state.SetLabel(id);
    for (auto _ : state) benchmark::DoNotOptimize(run_check(id, 42, static_cast<int>(state.range(1))));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void serial_check(benchmark::State& state) {
    const char* id = kChecks[state.range(0)];
    state.SetLabel(id);
    for (auto _ : state) benchmark::DoNotOptimize(run_check_serial(id, 42, static_cast<int>(state.range(1))));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void parallel_rational(benchmark::State& state) {
    RunOptions opts;
    opts.backend = Backend::Rational;
    for (auto _ : state) benchmark::DoNotOptimize(run_check("DF2.T1", 42, 100, opts));
}

void serial_rational(benchmark::State& state) {
    RunOptions opts;
    opts.backend = Backend::Rational;
    for (auto _ : state) benchmark::DoNotOptimize(run_check_serial("DF2.T1", 42, 100, opts));
}

void parallel_verify(benchmark::State& state) {
    const auto p = ruler::builtin(ruler::BuiltinId::Problem3);
    for (auto _ : state) benchmark::DoNotOptimize(ruler::verify(p, 300, 42));
}

void serial_verify(benchmark::State& state) {
    const auto p = ruler::builtin(ruler::BuiltinId::Problem3);
    for (auto _ : state) benchmark::DoNotOptimize(ruler::verify_serial(p, 300, 42));
}

void check_args(benchmark::internal::Benchmark* b) {
    for (int i = 0; i < 4; ++i) b->Args({i, 300})->Args({i, 3000});
}

}  // namespace

BENCHMARK(parallel_check)->Apply(check_args)->Unit(benchmark::kMillisecond);
BENCHMARK(serial_check)->Apply(check_args)->Unit(benchmark::kMillisecond);
BENCHMARK(parallel_rational)->Unit(benchmark::kMillisecond);
BENCHMARK(serial_rational)->Unit(benchmark::kMillisecond);
BENCHMARK(parallel_verify)->Unit(benchmark::kMillisecond);
BENCHMARK(serial_verify)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
