#include <benchmark/benchmark.h>

#include "boardmagic/blocks.hpp"
#include "boardmagic/construct.hpp"
#include "boardmagic/oracle.hpp"

namespace {

using namespace boardmagic;

void BM_SumProfile(benchmark::State& state) {
    Design d = construct_tri(Board{3, 5, 8});
    for (auto _ : state) benchmark::DoNotOptimize(sum_profile(d));
}
BENCHMARK(BM_SumProfile);

void BM_MagicSquare(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(magic_square(n, 0));
}
BENCHMARK(BM_MagicSquare)->Arg(9)->Arg(16)->Arg(30);

void BM_MagicRectangle(benchmark::State& state) {
    const int h = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(magic_rectangle(h, k, 0));
}
BENCHMARK(BM_MagicRectangle)->Args({9, 15})->Args({24, 30})->Args({31, 57});

void BM_ConstructTri(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(construct_tri(Board{3, d + 2, 2 * d}));
}
BENCHMARK(BM_ConstructTri)->Arg(5)->Arg(15)->Arg(25);

void BM_OracleMagic222(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(search(Board{2, 2, 2}, MagicClass::Magic));
}
BENCHMARK(BM_OracleMagic222);

void BM_OracleBi114(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(search(Board{1, 1, 4}, MagicClass::Bi));
}
BENCHMARK(BM_OracleBi114);

}  // namespace

BENCHMARK_MAIN();
