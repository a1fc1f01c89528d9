#include <benchmark/benchmark.h>

#include "semidom/families.hpp"
#include "semidom/msd.hpp"
#include "semidom/solvers.hpp"
#include "semidom/trees.hpp"

using namespace semidom;

namespace {

void BM_SolveTrees(benchmark::State& state, Variant variant) {
    const auto trees = enumerate_trees(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        long total = 0;
        for (const auto& t : trees) total += min_value(t, variant);
        benchmark::DoNotOptimize(total);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(trees.size()));
}
BENCHMARK_CAPTURE(BM_SolveTrees, plain, Variant::Plain)->DenseRange(10, 14, 2);
BENCHMARK_CAPTURE(BM_SolveTrees, total, Variant::Total)->DenseRange(10, 14, 2);
BENCHMARK_CAPTURE(BM_SolveTrees, semitotal, Variant::Semitotal)->DenseRange(10, 14, 2);

void BM_LexLeastWitness(benchmark::State& state) {
    const Graph g = path_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(min_set(g, Variant::Semitotal));
}
BENCHMARK(BM_LexLeastWitness)->RangeMultiplier(2)->Range(8, 32);

void BM_Msd(benchmark::State& state) {
    const auto trees = enumerate_trees(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        long total = 0;
        for (const auto& t : trees) total += msd_semitotal(t, 3).k;
        benchmark::DoNotOptimize(total);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(trees.size()));
}
BENCHMARK(BM_Msd)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void BM_EnumerateTrees(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long count = 0;
        for_each_tree(n, [&](const Graph&) { return ++count > 0; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateTrees)->DenseRange(12, 16, 2);

void BM_GenerateFamily(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_family(FamilyId::T1, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_GenerateFamily)->DenseRange(10, 14, 2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
