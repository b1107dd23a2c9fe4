// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the design, matching, quadrature, and array paths.
// Run manually: build/benchmarks/kapatch_benchmarks [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include <complex>

#include "kapatch/array.hpp"
#include "kapatch/circuit.hpp"
#include "kapatch/geometry.hpp"
#include "kapatch/radiation.hpp"

namespace {

using namespace kapatch;

PatchGeometry reference_design() {
    return design_patch(DesignSpec{29e9, WidthFormula::Standard, 50.0},
                        Substrate{2.2, 0.784, 0.0009, "RT-duroid-5880"});
}

void BM_design_patch(benchmark::State& state) {
    const DesignSpec spec{29e9, WidthFormula::Standard, 50.0};
    const Substrate sub{2.2, 0.784, 0.0009, "RT-duroid-5880"};
    for (auto _ : state) benchmark::DoNotOptimize(design_patch(spec, sub));
}
BENCHMARK(BM_design_patch);

void BM_match_feed(benchmark::State& state) {
    const PatchGeometry geo = reference_design();
    for (auto _ : state) benchmark::DoNotOptimize(match_feed(geo, 50.0));
}
BENCHMARK(BM_match_feed);

void BM_s11_sweep_401(benchmark::State& state) {
    const PatchGeometry geo = reference_design();
    const FeedModel feed = match_feed(geo, 50.0);
    const double f0 = resonant_frequency(geo);
    for (auto _ : state)
        benchmark::DoNotOptimize(s11_sweep(feed, geo, 0.93 * f0, 1.07 * f0, 401));
}
BENCHMARK(BM_s11_sweep_401);

void BM_array_factor_8x8(benchmark::State& state) {
    ArrayLayout layout = uniform_layout(8, 8);
    layout.excitations = steering_phases(layout, 30.0, 0.0);
    double theta = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(array_factor(layout, theta, 0.7));
        theta += 1e-6;  // defeat result caching by the optimizer
    }
}
BENCHMARK(BM_array_factor_8x8);

/// Arg is the angular step in tenths of a degree.
void BM_sample_pattern(benchmark::State& state) {
    const PatchGeometry geo = reference_design();
    const AngularGrid grid(static_cast<double>(state.range(0)) / 10.0);
    for (auto _ : state) benchmark::DoNotOptimize(sample_pattern(geo, grid));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(grid.n_theta() * grid.n_phi()));
}
BENCHMARK(BM_sample_pattern)->Arg(20)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_total_pattern_8x8(benchmark::State& state) {
    const PatchGeometry geo = reference_design();
    const ArrayLayout layout = uniform_layout(8, 8);
    const AngularGrid grid(static_cast<double>(state.range(0)) / 10.0);
    for (auto _ : state) benchmark::DoNotOptimize(total_pattern(geo, layout, grid));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(grid.n_theta() * grid.n_phi()));
}
BENCHMARK(BM_total_pattern_8x8)->Arg(20)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
