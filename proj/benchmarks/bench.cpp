#include <benchmark/benchmark.h>

#include <random>

#include "sqcolor/discharging.hpp"
#include "sqcolor/testkit.hpp"
#include "sqcolor/solve8.hpp"

using namespace sqcolor;

namespace {

struct Instance {
    Graph g;
    ListAssignment lists;
};

Instance cubic(int n, int k) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    Graph g = gen_random_cubic(n, static_cast<std::uint64_t>(n));
    auto lists = random_lists(g.vertex_count(), k, 3 * k, rng);
    return {std::move(g), std::move(lists)};
}

// Cubic graph with every edge subdivided `times` times, about n vertices in total.
Instance subdivided(int n, int k, int times) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    int base = static_cast<int>(n / (1.0 + 1.5 * times));
    base -= base % 2;
    Graph g = subdivide(gen_random_cubic(std::max(base, 4), static_cast<std::uint64_t>(n)), times);
    auto lists = random_lists(g.vertex_count(), k, 3 * k, rng);
    return {std::move(g), std::move(lists)};
}

void BM_Square(benchmark::State& state) {
    const Graph g = gen_random_cubic(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(square(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Square)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity();

void BM_Girth(benchmark::State& state) {
    const Graph g = gen_random_cubic(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(girth(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Girth)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Complexity();

void BM_MadExact(benchmark::State& state) {
    const Graph g = subdivide(gen_random_cubic(static_cast<int>(state.range(0)), 3), 1);
    for (auto _ : state) benchmark::DoNotOptimize(mad_exact(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MadExact)->RangeMultiplier(4)->Range(1 << 6, 1 << 12)->Complexity();

void BM_Solve8(benchmark::State& state) {
    const Instance in = cubic(static_cast<int>(state.range(0)), 8);
    for (auto _ : state) benchmark::DoNotOptimize(solve8(in.g, in.lists));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Solve8)->RangeMultiplier(4)->Range(1 << 6, 1 << 14)->Complexity();

void BM_Solve7(benchmark::State& state) {
    const Instance in = subdivided(static_cast<int>(state.range(0)), 7, 1);
    for (auto _ : state) benchmark::DoNotOptimize(solve7(in.g, in.lists));
    state.SetComplexityN(static_cast<std::int64_t>(in.g.vertex_count()));
}
BENCHMARK(BM_Solve7)->RangeMultiplier(2)->Range(10000, 80000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

void BM_Solve6(benchmark::State& state) {
    const Instance in = subdivided(static_cast<int>(state.range(0)), 6, 2);
    for (auto _ : state) benchmark::DoNotOptimize(solve6(in.g, in.lists));
    state.SetComplexityN(static_cast<std::int64_t>(in.g.vertex_count()));
}
BENCHMARK(BM_Solve6)->RangeMultiplier(2)->Range(10000, 80000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

void BM_ExactListColorC6(benchmark::State& state) {
    const Graph sq = square(gen_named("cycle6"));
    std::mt19937_64 rng(4);
    std::vector<ListAssignment> pool;
    for (int i = 0; i < 256; ++i) pool.push_back(random_lists(6, 3, 9, rng));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(exact_list_color(sq, pool[i++ % pool.size()]));
}
BENCHMARK(BM_ExactListColorC6);

}  // namespace

BENCHMARK_MAIN();
