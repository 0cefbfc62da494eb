#include "fps/series.hpp"
#include "fps/theorem.hpp"

#include <benchmark/benchmark.h>

using fps::TruncatedPowerSeries;

namespace {

TruncatedPowerSeries dense(std::uint64_t seed, int precision) {
    // shift the random regular series up to a unit constant term
    auto c = fps::random_regular(seed, precision + 1, 9).coefficients();
    c.erase(c.begin());
    return TruncatedPowerSeries::from_coeffs(std::move(c));
}

void BM_Mul(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto f = dense(1, n);
    const auto g = dense(2, n);
    for (auto _ : state) benchmark::DoNotOptimize(mul(f, g));
}

void BM_Reciprocal(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto f = dense(3, n);
    for (auto _ : state) benchmark::DoNotOptimize(reciprocal(f));
}

void BM_Compose(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto f = dense(4, n);
    const auto g = fps::random_regular(5, n, 9);
    for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
}

}  // namespace

BENCHMARK(BM_Mul)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_Reciprocal)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_Compose)->Arg(8)->Arg(16)->Arg(32);
