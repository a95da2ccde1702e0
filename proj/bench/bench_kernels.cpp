// Serial reference kernels against their OpenMP counterparts, across row widths.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "chipfire/core.hpp"
#include "chipfire/kernels.hpp"

using namespace chipfire;

namespace {

std::vector<ChipCount> random_row(std::size_t width) {
    std::mt19937_64 rng(width);
    std::vector<ChipCount> row(width);
    for (auto& v : row) v = ChipCount::from_raw(static_cast<u128>(rng()) << 20);
    return row;
}

template <Kernel K>
void BM_FireRow(benchmark::State& state) {
    const auto in = random_row(static_cast<std::size_t>(state.range(0)));
    std::vector<ChipCount> out(in.size() + 1);
    for (auto _ : state) {
        kernels::fire_row(K, in, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}

template <Kernel K>
void BM_Totals(benchmark::State& state) {
    const auto in = random_row(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::totals(K, in));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}

template <Kernel K>
void BM_Diff(benchmark::State& state) {
    const auto in = random_row(static_cast<std::size_t>(state.range(0)));
    std::vector<ChipDelta> out(in.size() + 1);
    for (auto _ : state) {
        kernels::diff(K, in, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}

template <Kernel K>
void BM_FullTable(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(for_each_row(n, [](const Row&) {}, K));
}

}  // namespace

BENCHMARK(BM_FireRow<Kernel::serial>)->RangeMultiplier(8)->Range(512, 1 << 18);
BENCHMARK(BM_FireRow<Kernel::parallel>)->RangeMultiplier(8)->Range(512, 1 << 18);
BENCHMARK(BM_Totals<Kernel::serial>)->RangeMultiplier(8)->Range(512, 1 << 18);
BENCHMARK(BM_Totals<Kernel::parallel>)->RangeMultiplier(8)->Range(512, 1 << 18);
BENCHMARK(BM_Diff<Kernel::serial>)->RangeMultiplier(8)->Range(512, 1 << 18);
BENCHMARK(BM_Diff<Kernel::parallel>)->RangeMultiplier(8)->Range(512, 1 << 18);
BENCHMARK(BM_FullTable<Kernel::serial>)->DenseRange(18, 22, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FullTable<Kernel::parallel>)->DenseRange(18, 22, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
