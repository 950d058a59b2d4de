#include <benchmark/benchmark.h>

#include <random>

#include "twopos/canonical.hpp"
#include "twopos/census.hpp"
#include "twopos/families.hpp"
#include "twopos/graph.hpp"
#include "twopos/inertia.hpp"
#include "twopos/spectral.hpp"

namespace {

twopos::Graph random_graph(int n, std::mt19937& rng) {
    std::bernoulli_distribution coin(0.5);
    twopos::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

void BM_inertia(benchmark::State& state) {
    std::mt19937 rng(7);
    twopos::Graph g = random_graph(int(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(twopos::inertia(g));
}
BENCHMARK(BM_inertia)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_eigenvalues(benchmark::State& state) {
    std::mt19937 rng(11);
    twopos::Graph g = random_graph(int(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(twopos::eigenvalues(g));
}
BENCHMARK(BM_eigenvalues)->Arg(8)->Arg(16)->Arg(32);

void BM_canonical_form(benchmark::State& state) {
    std::mt19937 rng(13);
    twopos::Graph g = random_graph(int(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(twopos::canonical_form(g));
}
BENCHMARK(BM_canonical_form)->Arg(6)->Arg(8)->Arg(10);

void BM_build_bk(benchmark::State& state) {
    twopos::BkSpec spec = twopos::parse_bk("B8(3,1,2,1;2,2,1,2)");
    for (auto _ : state) benchmark::DoNotOptimize(twopos::build_bk(spec));
}
BENCHMARK(BM_build_bk);

void BM_oracle_census(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(twopos::oracle_census(int(state.range(0)), 1));
}
BENCHMARK(BM_oracle_census)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_compute_dstar(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(twopos::compute_dstar(int(state.range(0))));
}
BENCHMARK(BM_compute_dstar)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
