// Microbenchmarks contrasting the closed forms with brute-force
// enumeration, and sizing the Apery machinery itself.

#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include <nsgap/compound.hpp>
#include <nsgap/oracle.hpp>
#include <nsgap/parity.hpp>
#include <nsgap/semigroup.hpp>
#include <nsgap/telescopic.hpp>

namespace {

using namespace nsgap;

// scales the worked example: pair A=(2,3,...), B=(5,5,...) of length p
SuitablePair scaled_pair(std::int64_t p) {
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> b;
    for (std::int64_t i = 0; i < p; ++i) {
        a.push_back(i % 2 == 0 ? 2 : 3);
        b.push_back(5);
    }
    return validate_pair(std::move(a), std::move(b));
}

void BM_apery_shortest_path(benchmark::State& state) {
    const auto terms = build_compound(scaled_pair(state.range(0))).terms;
    for (auto _ : state) {
        const auto g = validate_generators(terms);
        benchmark::DoNotOptimize(apery_set(g, g.smallest()).sum());
    }
}
BENCHMARK(BM_apery_shortest_path)->Arg(3)->Arg(5)->Arg(7);

void BM_free_apery_enumeration(benchmark::State& state) {
    const auto terms = build_compound(scaled_pair(state.range(0))).terms;
    const TelescopicAnalysis an = analyze_sequence(terms);
    for (auto _ : state) {
        benchmark::DoNotOptimize(free_apery_set(an).sum());
    }
}
BENCHMARK(BM_free_apery_enumeration)->Arg(3)->Arg(5)->Arg(7);

void BM_parity_closed_form(benchmark::State& state) {
    const SuitablePair pair = scaled_pair(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(parity_difference_compound(pair));
    }
}
BENCHMARK(BM_parity_closed_form)->Arg(3)->Arg(5)->Arg(7);

void BM_parity_oracle_sieve(benchmark::State& state) {
    const auto terms = build_compound(scaled_pair(state.range(0))).terms;
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::sieve_parity_difference(terms));
    }
}
BENCHMARK(BM_parity_oracle_sieve)->Arg(3)->Arg(5)->Arg(7);

void BM_gap_enumeration(benchmark::State& state) {
    const auto terms = build_compound(scaled_pair(state.range(0))).terms;
    for (auto _ : state) {
        const auto g = validate_generators(terms);
        benchmark::DoNotOptimize(gaps(g).genus());
    }
}
BENCHMARK(BM_gap_enumeration)->Arg(3)->Arg(5)->Arg(7);

} // namespace

BENCHMARK_MAIN();
