#include <benchmark/benchmark.h>

#include "tribill/cover_map.hpp"
#include "tribill/fingerprint.hpp"
#include "tribill/j_invariant.hpp"
#include "tribill/lemma_covers.hpp"
#include "tribill/search.hpp"
#include "tribill/unfolding.hpp"

using namespace tribill;

static void BM_cyclotomic_mul(benchmark::State& state) {
    long conductor = state.range(0);
    std::vector<Rational> a(euler_phi(conductor)), b(euler_phi(conductor));
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = make_rational(static_cast<long>(i) + 1, 3);
        b[i] = make_rational(2 * static_cast<long>(i) - 5, 7);
    }
    CyclotomicNumber x(conductor, a), y(conductor, b);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_cyclotomic_mul)->Arg(24)->Arg(60)->Arg(120);

static void BM_unfold_area(benchmark::State& state) {
    TriangleSignature sig(3, 4, 5);
    for (auto _ : state) {
        UnfoldedSurface surf(sig);
        benchmark::DoNotOptimize(surf.area());
    }
}
BENCHMARK(BM_unfold_area);

static void BM_fingerprint(benchmark::State& state) {
    TriangleSignature sig(3, 4, 5);
    for (auto _ : state) benchmark::DoNotOptimize(fingerprint(sig, 3));
}
BENCHMARK(BM_fingerprint);

static void BM_j_invariant(benchmark::State& state) {
    TriangleSignature sig(3, 4, 5);
    for (auto _ : state) benchmark::DoNotOptimize(j_invariant(sig));
}
BENCHMARK(BM_j_invariant);

static void BM_family_map(benchmark::State& state) {
    auto fam = lemma7_family(3, 4);
    for (auto _ : state) {
        auto corr = construct_family_map(fam, 1);
        benchmark::DoNotOptimize(verify_map(corr));
    }
}
BENCHMARK(BM_family_map);

static void BM_filter_chain(benchmark::State& state) {
    TriangleSignature a(1, 3, 6), b(2, 3, 5);
    for (auto _ : state) benchmark::DoNotOptimize(filter_chain(a, b));
}
BENCHMARK(BM_filter_chain);

static void BM_search(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(search(state.range(0)));
}
BENCHMARK(BM_search)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
