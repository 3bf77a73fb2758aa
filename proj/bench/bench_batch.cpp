#include "seifert5/batch.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace seifert5;

namespace {

std::vector<Presentation> presentations(std::size_t n) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> gens(2, 6), entry(-50, 50);
    std::vector<Presentation> out;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t g = gens(rng);
        IntMatrix m(g + 1, g);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < g; ++c) m(r, c) = entry(rng);
        out.push_back({g, m});
    }
    return out;
}

void BM_groups_serial(benchmark::State& st) {
    const auto in = presentations(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(groups_from_presentations_serial(in));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_groups_parallel(benchmark::State& st) {
    const auto in = presentations(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(groups_from_presentations_parallel(in));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_sweep_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(main_series_sweep_serial(2, st.range(0)));
}

void BM_sweep_parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(main_series_sweep_parallel(2, st.range(0)));
}

}  // namespace

BENCHMARK(BM_groups_serial)->Arg(256)->Arg(4096)->UseRealTime();
BENCHMARK(BM_groups_parallel)->Arg(256)->Arg(4096)->UseRealTime();
BENCHMARK(BM_sweep_serial)->Arg(60)->Arg(200)->UseRealTime();
BENCHMARK(BM_sweep_parallel)->Arg(60)->Arg(200)->UseRealTime();

BENCHMARK_MAIN();
