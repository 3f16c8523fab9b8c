// Serial vs OpenMP timings of the parallel kernels. The second argument of
// every benchmark is 0 for Execution::serial and 1 for Execution::parallel.

#include <benchmark/benchmark.h>

#include "rmt/ensembles.hpp"
#include "rmt/grid.hpp"
#include "rmt/parallel.hpp"
#include "rmt/prolate.hpp"
#include "rmt/random.hpp"
#include "rmt/spacings.hpp"
#include "rmt/tridiag.hpp"

namespace {

rmt::Execution mode(const benchmark::State& state) {
    return state.range(1) == 0 ? rmt::Execution::serial : rmt::Execution::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(1) == 0 ? "serial" : "parallel"); }

void BM_AllEigenvalues(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    rmt::RngStream rng(1, 0);
    const auto t = rmt::sample_h_beta(rmt::EnsembleSpec::exact(n, 2), rng);
    for (auto _ : state) benchmark::DoNotOptimize(rmt::all_eigenvalues(t, rmt::kDefaultEigenTol, mode(state)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
    label(state);
}
BENCHMARK(BM_AllEigenvalues)->ArgsProduct({{200, 1000}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_SpacingBatch(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rmt::simulate_spacing_batch(n, 8, 2, 0, mode(state)));
    label(state);
}
BENCHMARK(BM_SpacingBatch)->ArgsProduct({{400}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_ProlateCurve(benchmark::State& state) {
    const auto s = rmt::arange_inclusive(0.0, 0.05, 5.0);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rmt::gap_probability_curve(s, n, mode(state)));
    label(state);
}
BENCHMARK(BM_ProlateCurve)->ArgsProduct({{40, 80}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_SimulateLargest(benchmark::State& state) {
    const auto spec = rmt::EnsembleSpec::large_n(static_cast<std::uint64_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(rmt::simulate_largest(spec, 64, 0, mode(state)));
    state.SetItemsProcessed(state.iterations() * 64);
    label(state);
}
BENCHMARK(BM_SimulateLargest)->ArgsProduct({{1000000}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
