#include <benchmark/benchmark.h>

#include "patternhom/chains.hpp"
#include "patternhom/closed_forms.hpp"
#include "patternhom/egf.hpp"
#include "patternhom/oracle.hpp"

using namespace patternhom;

namespace {

void BM_ChainDP(benchmark::State& state) {
    const PatternSet P = PatternSet::parse("2413");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto table = enumerate_chains(P, n);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_ChainDP)->Arg(8)->Arg(10)->Arg(12);

void BM_ClusterDP(benchmark::State& state) {
    const PatternSet P = PatternSet::parse("2413");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto table = enumerate_clusters(P, n);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_ClusterDP)->Arg(8)->Arg(10);

void BM_ChainDPLongPattern(benchmark::State& state) {
    const PatternSet P = PatternSet::parse("23154");
    for (auto _ : state) {
        auto table = enumerate_chains(P, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_ChainDPLongPattern)->Arg(9)->Arg(13);

void BM_OracleCount(benchmark::State& state) {
    const PatternSet P = PatternSet::parse("1324");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto count = count_avoiders(P, n);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_OracleCount)->Arg(8)->Arg(9);

void BM_SeriesInversion(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    std::vector<BigInt> coeffs(static_cast<std::size_t>(order) + 1);
    coeffs[0] = 1;
    for (int n = 1; n <= order; ++n) coeffs[static_cast<std::size_t>(n)] = (n % 3) - 1;
    const Egf h(coeffs);
    for (auto _ : state) {
        auto g = invert(h);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_SeriesInversion)->Arg(32)->Arg(128);

void BM_RootBracketing(benchmark::State& state) {
    std::vector<BigInt> coeffs(31, 1);
    coeffs[1] = -1;
    coeffs[2] = 0;
    coeffs[3] = 0;
    const GsKernelPoly f = gs_kernel_from_coeffs(coeffs);
    for (auto _ : state) {
        auto root = smallest_positive_root(f);
        benchmark::DoNotOptimize(root);
    }
}
BENCHMARK(BM_RootBracketing);

void BM_ClosedForm2413(benchmark::State& state) {
    for (auto _ : state) {
        auto table = chains_2413(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_ClosedForm2413)->Arg(10)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
