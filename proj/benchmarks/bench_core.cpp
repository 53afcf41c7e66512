// Microbenchmarks for the hot kernels: classification, enumeration, the
// reduction sweep, canonical forms, and frieze construction.
#include <benchmark/benchmark.h>

#include <quiddity/cycle.hpp>
#include <quiddity/dihedral.hpp>
#include <quiddity/enumerate.hpp>
#include <quiddity/factor.hpp>
#include <quiddity/frieze.hpp>
#include <quiddity/sum.hpp>

#include <random>
#include <vector>

using namespace quiddity;

namespace {

Cycle random_quiddity(std::size_t target_len, std::uint64_t seed) {
    // Repeated ⊕ with (1,1,1) adds one entry per step and stays quiddity.
    std::mt19937_64 rng(seed);
    Cycle c{1, 1, 1};
    while (c.length() < target_len) {
        Cycle next = cycle_sum(c, Cycle{1, 1, 1});
        std::uniform_int_distribution<long> rot(0, static_cast<long>(next.length()) - 1);
        c = apply(DihedralElem(next.length(), rot(rng), false), next);
    }
    return c;
}

}  // namespace

static void BM_classify(benchmark::State& state) {
    Cycle c = random_quiddity(static_cast<std::size_t>(state.range(0)), 17);
    for (auto _ : state) benchmark::DoNotOptimize(classify(c));
}
BENCHMARK(BM_classify)->Arg(16)->Arg(64)->Arg(256);

static void BM_cycle_sum(benchmark::State& state) {
    Cycle a = random_quiddity(static_cast<std::size_t>(state.range(0)), 3);
    Cycle b = random_quiddity(static_cast<std::size_t>(state.range(0)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(cycle_sum(a, b));
}
BENCHMARK(BM_cycle_sum)->Arg(16)->Arg(64);

static void BM_canonical_form(benchmark::State& state) {
    Cycle c = random_quiddity(static_cast<std::size_t>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(c));
}
BENCHMARK(BM_canonical_form)->Arg(16)->Arg(64);

static void BM_enumerate(benchmark::State& state) {
    DomainSpec d = DomainSpec::bounded_integers(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_cycles(state.range(0), d, std::nullopt));
}
BENCHMARK(BM_enumerate)->Arg(4)->Arg(5)->Arg(6);

static void BM_reduce_once(benchmark::State& state) {
    std::vector<Scalar> ones(9, Scalar(1));
    Cycle c(ones);
    DomainSpec d = DomainSpec::nonnegative_integers();
    for (auto _ : state) benchmark::DoNotOptimize(reduce_once(c, d));
}
BENCHMARK(BM_reduce_once);

static void BM_is_irreducible(benchmark::State& state) {
    std::vector<Scalar> ones(9, Scalar(1));
    Cycle c(ones);
    DomainSpec d = DomainSpec::positive_integers();
    for (auto _ : state) benchmark::DoNotOptimize(is_irreducible(c, d));
}
BENCHMARK(BM_is_irreducible);

static void BM_build_and_validate_frieze(benchmark::State& state) {
    Cycle c = random_quiddity(static_cast<std::size_t>(state.range(0)), 23);
    if (classify(c) != Lambda::Minus) c = Cycle{3, 1, 2, 4, 1, 2, 2};
    for (auto _ : state) {
        FriezePattern p = build_frieze(c, 2);
        benchmark::DoNotOptimize(validate_frieze(p));
    }
}
BENCHMARK(BM_build_and_validate_frieze)->Arg(12)->Arg(24);

BENCHMARK_MAIN();
