#include <benchmark/benchmark.h>

#include "ieq/behrend.hpp"
#include "ieq/bohr.hpp"
#include "ieq/equations.hpp"
#include "ieq/fourier.hpp"
#include "ieq/sampling.hpp"

using namespace ieq;

namespace {

const std::int64_t kPrimes[] = {101, 1009, 10007, 100003};

void BM_FftConvolveCounts(benchmark::State& state) {
    const auto p = kPrimes[state.range(0)];
    const auto a = random_residue_set(PrimeCyclicGroup(p), static_cast<std::size_t>(p / 4), 1);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(p), 0);
    for (auto x : a.elements()) counts[static_cast<std::size_t>(x)] = 1;
    for (auto _ : state) benchmark::DoNotOptimize(fft_convolve_counts(counts, counts));
}
BENCHMARK(BM_FftConvolveCounts)->DenseRange(0, 3);

void BM_DirectConvolveCounts(benchmark::State& state) {
    const auto p = kPrimes[state.range(0)];
    const auto a = random_residue_set(PrimeCyclicGroup(p), static_cast<std::size_t>(p / 4), 1);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(p), 0);
    for (auto x : a.elements()) counts[static_cast<std::size_t>(x)] = 1;
    for (auto _ : state) benchmark::DoNotOptimize(direct_convolve_counts(counts, counts));
}
BENCHMARK(BM_DirectConvolveCounts)->DenseRange(0, 2);

void BM_CountFast(benchmark::State& state) {
    const auto p = kPrimes[state.range(0)];
    const auto a = random_residue_set(PrimeCyclicGroup(p), static_cast<std::size_t>(p / 10), 2);
    const InvariantEquation eq({1, 1, 1, -3});
    for (auto _ : state) benchmark::DoNotOptimize(count_solutions_fast(a, eq));
}
BENCHMARK(BM_CountFast)->DenseRange(0, 3);

void BM_CountBruteforce(benchmark::State& state) {
    const auto a = random_residue_set(PrimeCyclicGroup(1009), static_cast<std::size_t>(state.range(0)), 2);
    const InvariantEquation eq({1, 1, 1, -3});
    for (auto _ : state) benchmark::DoNotOptimize(count_solutions_bruteforce(a, eq));
}
BENCHMARK(BM_CountBruteforce)->Arg(10)->Arg(30)->Arg(60);

void BM_BohrEnumerate(benchmark::State& state) {
    const std::vector<std::int64_t> gamma{1, 17, 345};
    const BohrSet b(PrimeCyclicGroup(kPrimes[state.range(0)]), gamma, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate(b));
}
BENCHMARK(BM_BohrEnumerate)->DenseRange(0, 3);

void BM_BohrRegularity(benchmark::State& state) {
    const std::vector<std::int64_t> gamma{1, 17};
    const BohrSet b(PrimeCyclicGroup(kPrimes[state.range(0)]), gamma, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(is_regular(b));
}
BENCHMARK(BM_BohrRegularity)->DenseRange(0, 2);

void BM_BehrendBuildVerify(benchmark::State& state) {
    const BehrendParams params{state.range(0), 3, 2, 4};
    for (auto _ : state) {
        const auto out = build_behrend(params);
        benchmark::DoNotOptimize(verify_behrend(out, params));
    }
}
BENCHMARK(BM_BehrendBuildVerify)->Arg(5)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
