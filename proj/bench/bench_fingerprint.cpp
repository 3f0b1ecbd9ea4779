#include "atlas/classify.hpp"
#include "atlas/tables.hpp"

#include <benchmark/benchmark.h>

using namespace atlas;

static std::vector<TensorElement> reps()
{
    std::vector<TensorElement> out;
    for (const auto& row : table1())
        for (const auto& v : expand_row(row))
            out.push_back(v);
    return out;
}

static void BM_FingerprintSerial(benchmark::State& state)
{
    const auto v = reps();
    for (auto _ : state)
        benchmark::DoNotOptimize(fingerprint_all_serial(v));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(v.size()));
}
BENCHMARK(BM_FingerprintSerial)->Unit(benchmark::kMillisecond);

static void BM_FingerprintParallel(benchmark::State& state)
{
    const auto v = reps();
    for (auto _ : state)
        benchmark::DoNotOptimize(fingerprint_all_parallel(v));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(v.size()));
}
BENCHMARK(BM_FingerprintParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
