#include <cstdint>

#include <benchmark/benchmark.h>

#include "totient/alternates.hpp"
#include "totient/arithmetic.hpp"
#include "totient/constraints.hpp"
#include "totient/inverse_totient.hpp"
#include "totient/recurrent_set.hpp"

namespace {

using totient::Int;

void bm_euler_phi(benchmark::State& state) {
    const Int n = Int(1) << state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(totient::euler_phi(n + 1));
}
BENCHMARK(bm_euler_phi)->Arg(32)->Arg(48)->Arg(64);

void bm_factorize_semiprime(benchmark::State& state) {
    const Int n = Int(1000003) * 1000033;  // both factors beyond the trial range
    for (auto _ : state) benchmark::DoNotOptimize(totient::factorize(n));
}
BENCHMARK(bm_factorize_semiprime);

void bm_preimages(benchmark::State& state) {
    const Int n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(totient::preimages(n));
}
BENCHMARK(bm_preimages)->Arg(48)->Arg(5040)->Arg(100'000)->Arg(1'000'000);

void bm_primes_below(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(totient::primes_below(std::uint64_t(state.range(0))));
}
BENCHMARK(bm_primes_below)->Arg(1'000'000)->Arg(10'000'000);

void bm_for_each_phi(benchmark::State& state) {
    for (auto _ : state) {
        std::uint64_t acc = 0;
        totient::for_each_phi(std::uint64_t(state.range(0)),
                              [&](std::uint64_t, std::uint64_t ph) { acc += ph; });
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(bm_for_each_phi)->Arg(1'000'000)->Arg(10'000'000);

void bm_build_set_v4(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            totient::build_set(totient::RuleVariant::v4(), std::uint64_t(state.range(0))));
}
BENCHMARK(bm_build_set_v4)->Arg(1'000)->Arg(100'000);

void bm_scan_conjecture(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            totient::scan_conjecture(2, state.range(0), totient::default_caps(), 1));
}
BENCHMARK(bm_scan_conjecture)->Arg(1'000);

void bm_generalized_constraint(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(totient::generalized_constraint(std::uint64_t(state.range(0))));
}
BENCHMARK(bm_generalized_constraint)->Arg(1'000);

}  // namespace

BENCHMARK_MAIN();
