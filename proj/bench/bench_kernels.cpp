// Parallel kernels against their serial reference twins.
//
//   ./kernel_bench --benchmark_filter=CountShattered
//   OMP_NUM_THREADS=8 ./kernel_bench

#include <benchmark/benchmark.h>

#include "pvc/alpha.hpp"
#include "pvc/auction.hpp"
#include "pvc/far.hpp"
#include "pvc/generators.hpp"
#include "pvc/shatter.hpp"

using namespace pvc;

namespace {

PartitionFamily fixture_family(int m, std::size_t size) {
    Rng rng(0xBE7C4ULL + static_cast<std::uint64_t>(m));
    return random_family(Universe(m), size, rng);
}

Budget wide_budget() {
    Budget b;
    b.max_pow2_m = 30;
    b.max_pow3_m = 17;
    b.max_subset_size = 30;
    return b;
}

void BM_CountShattered_Serial(benchmark::State& state) {
    const PartitionFamily r = fixture_family(static_cast<int>(state.range(0)), 24);
    const Budget budget = wide_budget();
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::count_shattered_sets(r, budget));
    }
}

void BM_CountShattered_Parallel(benchmark::State& state) {
    const PartitionFamily r = fixture_family(static_cast<int>(state.range(0)), 24);
    const Budget budget = wide_budget();
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_shattered_sets(r, budget));
    }
}

void BM_VcDimension_Serial(benchmark::State& state) {
    const PartitionFamily r = fixture_family(static_cast<int>(state.range(0)), 32);
    const Budget budget = wide_budget();
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::vc_dimension(r, budget).dimension);
    }
}

void BM_VcDimension_Parallel(benchmark::State& state) {
    const PartitionFamily r = fixture_family(static_cast<int>(state.range(0)), 32);
    const Budget budget = wide_budget();
    for (auto _ : state) {
        benchmark::DoNotOptimize(vc_dimension(r, budget).dimension);
    }
}

void BM_AlphaExact_Serial(benchmark::State& state) {
    const PartitionFamily r = fixture_family(static_cast<int>(state.range(0)), 16);
    const Budget budget = wide_budget();
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::alpha_exact(r, budget).alpha.numerator());
    }
}

void BM_AlphaExact_Parallel(benchmark::State& state) {
    const PartitionFamily r = fixture_family(static_cast<int>(state.range(0)), 16);
    const Budget budget = wide_budget();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            alpha_of(r, AlphaMode::Exact, 0, 0, budget).alpha.numerator());
    }
}

void BM_MinPairwise_Serial(benchmark::State& state) {
    const PartitionFamily r =
        fixture_family(24, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::min_pairwise_distance(r).min_distance);
    }
}

void BM_MinPairwise_Parallel(benchmark::State& state) {
    const PartitionFamily r =
        fixture_family(24, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_pairwise_distance(r).min_distance);
    }
}

void BM_MeasureRatio_Serial(benchmark::State& state) {
    const PartitionFamily r = fixture_family(static_cast<int>(state.range(0)), 12);
    const Budget budget = wide_budget();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            reference::measure_ratio_exact(r, ProfileSpace::DisjointZeroOne, budget)
                .worst.numerator());
    }
}

void BM_MeasureRatio_Parallel(benchmark::State& state) {
    const PartitionFamily r = fixture_family(static_cast<int>(state.range(0)), 12);
    const Budget budget = wide_budget();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            measure_ratio(r, ProfileSpace::DisjointZeroOne, RatioMode::Exact, 0, 0, budget)
                .worst.numerator());
    }
}

}  // namespace

BENCHMARK(BM_CountShattered_Serial)->Arg(12)->Arg(14)->Arg(16);
BENCHMARK(BM_CountShattered_Parallel)->Arg(12)->Arg(14)->Arg(16);
BENCHMARK(BM_VcDimension_Serial)->Arg(12)->Arg(14);
BENCHMARK(BM_VcDimension_Parallel)->Arg(12)->Arg(14);
BENCHMARK(BM_AlphaExact_Serial)->Arg(8)->Arg(10);
BENCHMARK(BM_AlphaExact_Parallel)->Arg(8)->Arg(10);
BENCHMARK(BM_MinPairwise_Serial)->Arg(512)->Arg(2048);
BENCHMARK(BM_MinPairwise_Parallel)->Arg(512)->Arg(2048);
BENCHMARK(BM_MeasureRatio_Serial)->Arg(5)->Arg(6);
BENCHMARK(BM_MeasureRatio_Parallel)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
