#include "fps/inversion.hpp"
#include "fps/theorem.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_LagrangeInverse(benchmark::State& state) {
    const auto f = fps::random_regular(7, static_cast<int>(state.range(0)), 9);
    for (auto _ : state) benchmark::DoNotOptimize(fps::lagrange_inverse(f));
}

void BM_NewtonInverse(benchmark::State& state) {
    const auto f = fps::random_regular(7, static_cast<int>(state.range(0)), 9);
    for (auto _ : state) benchmark::DoNotOptimize(fps::newton_inverse(f));
}

}  // namespace

BENCHMARK(BM_LagrangeInverse)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_NewtonInverse)->Arg(8)->Arg(16)->Arg(32);
